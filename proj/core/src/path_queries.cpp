#include "lamplighter/path_queries.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "lamplighter/constructions.hpp"
#include "lamplighter/errors.hpp"
#include "lamplighter/metric.hpp"

namespace lamplighter {

namespace {

bool packed_less(const PackedConfig& a, const PackedConfig& b) {
  return a.cursor != b.cursor ? a.cursor < b.cursor : a.lamps < b.lamps;
}

std::uint64_t stage_limit(std::int64_t radius, unsigned max_exponent) {
  if (radius + 1 > static_cast<std::int64_t>(max_exponent)) {
    throw ResourceLimitError("enumerating N up to radius " + std::to_string(radius) +
                             " needs 2^" + std::to_string(radius + 1) +
                             " stages; the limit is 2^" + std::to_string(max_exponent));
  }
  return std::uint64_t{1} << (radius + 1);
}

// Ray vertices of R: R(-i) and the intermediate vertex between R(-i) and R(-i+1).
template <typename Visitor>
void for_each_ray_vertex(std::size_t max_depth, Visitor&& visit) {
  for (std::size_t i = 1; i <= max_depth; ++i) {
    const Configuration ray = ray_vertex(i);
    visit(ray);
    visit(apply_step(ray, Step::Toggle));
  }
}

}  // namespace

Walk finite_path(const PathSpec& spec) {
  switch (spec.kind) {
    case PathKind::I: return quasi_interval(spec.n);
    case PathKind::C: return quasi_circle(spec.n);
    default: throw std::invalid_argument("finite_path: " + spec.label() + " is infinite");
  }
}

std::vector<PackedConfig> path_vertices_within(const PathSpec& spec, int radius,
                                               std::optional<std::uint64_t> stage_bound) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  if (radius > kMaxBallRadius) {
    throw ResourceLimitError("path window radius " + std::to_string(radius) + " exceeds " +
                             std::to_string(kMaxBallRadius));
  }
  const PackedConfig origin{};
  std::vector<PackedConfig> out;
  auto keep_packed = [&](const PackedConfig& v) {
    if (word_distance(origin, v) <= radius) out.push_back(v);
  };
  auto keep = [&](const Configuration& v) {
    if (word_length(v) <= radius) out.push_back(*PackedConfig::pack(v));
  };

  if (spec.finite()) {
    const Walk walk = finite_path(spec);
    const std::size_t n = walk.closed() ? walk.vertices().size() - 1 : walk.vertices().size();
    for (std::size_t i = 0; i < n; ++i) keep(walk.vertices()[i]);
  } else {
    const std::uint64_t bound =
        stage_bound ? *stage_bound : stage_limit(radius, kDefaultMaxStageExponent + 4);
    for_each_stage_vertex(0, bound, keep_packed);
    if (spec.kind == PathKind::R) {
      for_each_ray_vertex(static_cast<std::size_t>(radius + 1) / 2 + 1, keep);
    }
  }
  std::sort(out.begin(), out.end(), packed_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Configuration> path_in_ball(const PathSpec& spec, const Ball& ball,
                                        std::optional<std::uint64_t> stage_bound) {
  if (!ball.centered_at_identity()) {
    throw std::invalid_argument("path_in_ball needs a ball centered at the identity");
  }
  std::vector<Configuration> out;
  for (const auto& v : path_vertices_within(spec, ball.radius(), stage_bound)) {
    out.push_back(v.unpack());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::int64_t> distance_to_path(const Configuration& v, const PathSpec& spec,
                                             std::int64_t cap, unsigned max_stage_exponent) {
  if (cap < 0) throw std::invalid_argument("negative cap");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  if (spec.finite()) {
    const Walk walk = finite_path(spec);
    for (const auto& w : walk.vertices()) best = std::min(best, word_distance(v, w));
  } else {
    const std::int64_t reach = word_length(v) + cap;
    const std::uint64_t bound = stage_limit(reach, max_stage_exponent);
    // reach <= max_stage_exponent - 1 < 32, so v fits the packed window.
    const PackedConfig pv = *PackedConfig::pack(v);
    for_each_stage_vertex(0, bound, [&](const PackedConfig& w) {
      best = std::min(best, word_distance(pv, w));
    });
    if (spec.kind == PathKind::R) {
      for_each_ray_vertex(static_cast<std::size_t>(reach + 1) / 2 + 1, [&](const Configuration& w) {
        best = std::min(best, word_distance(v, w));
      });
    }
  }
  if (best > cap) return std::nullopt;
  return best;
}

}  // namespace lamplighter
