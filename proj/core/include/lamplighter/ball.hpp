#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lamplighter/configuration.hpp"
#include "lamplighter/packed.hpp"

namespace lamplighter {

inline constexpr std::size_t kDefaultMemberCap = 5'000'000;
inline constexpr int kMaxBallRadius = 31;  // relative members must fit the packed window

// Metric ball B(center, radius) enumerated by breadth-first search.
//
// Members are stored relative to the center (center^-1 v) in packed form,
// in BFS order, together with their exact distance. Sizes grow roughly like
// 1.64^radius: 490 members at radius 8, 4167 at 12, about 6e5 at 22.
class Ball {
 public:
  // Throws ResourceLimitError when radius > kMaxBallRadius or the member
  // count would exceed member_cap.
  static Ball build(const Configuration& center, int radius,
                    std::size_t member_cap = kDefaultMemberCap);

  const Configuration& center() const noexcept { return center_; }
  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return relative_.size(); }
  bool centered_at_identity() const noexcept { return center_ == identity(); }

  Configuration member(std::size_t i) const;
  std::int64_t distance(std::size_t i) const { return distance_[i]; }
  std::span<const PackedConfig> relative_members() const noexcept { return relative_; }
  std::span<const std::int64_t> distances() const noexcept { return distance_; }

  std::optional<std::size_t> index_of(const Configuration& v) const;
  std::optional<std::size_t> index_of_relative(const PackedConfig& rel) const;
  bool contains(const Configuration& v) const { return index_of(v).has_value(); }

  // Number of members at each exact distance 0..radius (sphere sizes).
  std::vector<std::size_t> sphere_sizes() const;

 private:
  Configuration center_;
  Configuration center_inverse_;
  int radius_ = 0;
  std::vector<PackedConfig> relative_;
  std::vector<std::int64_t> distance_;
  std::unordered_map<PackedConfig, std::size_t, PackedConfigHash> index_;
};

}  // namespace lamplighter
