#include "lamplighter/ball.hpp"

#include <string>

#include "lamplighter/errors.hpp"

namespace lamplighter {

Ball Ball::build(const Configuration& center, int radius, std::size_t member_cap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be non-negative");
  if (radius > kMaxBallRadius) {
    throw ResourceLimitError("ball radius " + std::to_string(radius) + " exceeds the cap of " +
                             std::to_string(kMaxBallRadius));
  }
  Ball ball;
  ball.center_ = center;
  ball.center_inverse_ = invert(center);
  ball.radius_ = radius;

  auto admit = [&](const PackedConfig& v, std::int64_t d) {
    if (ball.relative_.size() >= member_cap) {
      throw ResourceLimitError("ball of radius " + std::to_string(radius) +
                               " exceeds the member cap of " + std::to_string(member_cap));
    }
    ball.index_.emplace(v, ball.relative_.size());
    ball.relative_.push_back(v);
    ball.distance_.push_back(d);
  };

  admit(PackedConfig{}, 0);
  for (std::size_t head = 0; head < ball.relative_.size(); ++head) {
    const std::int64_t d = ball.distance_[head];
    if (d == radius) break;  // BFS order: everything after is at distance `radius` too
    const PackedConfig u = ball.relative_[head];
    for (Step s : kAllSteps) {
      const PackedConfig w = u.stepped(s);
      if (!ball.index_.contains(w)) admit(w, d + 1);
    }
  }
  return ball;
}

Configuration Ball::member(std::size_t i) const { return compose(center_, relative_[i].unpack()); }

std::optional<std::size_t> Ball::index_of_relative(const PackedConfig& rel) const {
  auto it = index_.find(rel);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Ball::index_of(const Configuration& v) const {
  auto rel = PackedConfig::pack(compose(center_inverse_, v));
  if (!rel) return std::nullopt;
  return index_of_relative(*rel);
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (auto d : distance_) ++out[static_cast<std::size_t>(d)];
  return out;
}

}  // namespace lamplighter
