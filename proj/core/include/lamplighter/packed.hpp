#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "lamplighter/configuration.hpp"

namespace lamplighter {

// Fixed-window encoding used by the enumeration-heavy code: lamps at
// positions [-32, 31] live in one 64-bit word (bit p + 32).
struct PackedConfig {
  static constexpr int kOffset = 32;
  static constexpr Position kMinLamp = -32;
  static constexpr Position kMaxLamp = 31;

  std::uint64_t lamps = 0;
  std::int32_t cursor = 0;

  static constexpr bool in_window(Position p) { return p >= kMinLamp && p <= kMaxLamp; }
  static constexpr std::uint64_t bit(Position p) {
    return std::uint64_t{1} << static_cast<unsigned>(p + kOffset);
  }

  // nullopt if a lamp or the cursor falls outside the window.
  static std::optional<PackedConfig> pack(const Configuration& c);
  Configuration unpack() const;

  constexpr bool is_lit(Position p) const { return in_window(p) && (lamps & bit(p)) != 0; }

  // Precondition for Toggle: the cursor is inside the window.
  constexpr PackedConfig stepped(Step s) const {
    switch (s) {
      case Step::Toggle: return {lamps ^ bit(cursor), cursor};
      case Step::Right: return {lamps, cursor + 1};
      case Step::Left: return {lamps, cursor - 1};
    }
    return *this;
  }

  friend constexpr bool operator==(const PackedConfig&, const PackedConfig&) = default;
};

struct PackedConfigHash {
  std::size_t operator()(const PackedConfig& c) const noexcept {
    std::uint64_t h = c.lamps ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.cursor)) *
                                 0x9e3779b97f4a7c15ULL);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

// Same closed form as word_distance, on packed operands.
constexpr std::int64_t word_distance(const PackedConfig& g, const PackedConfig& h) {
  const std::uint64_t diff = g.lamps ^ h.lamps;
  std::int64_t lo = g.cursor < h.cursor ? g.cursor : h.cursor;
  std::int64_t hi = g.cursor < h.cursor ? h.cursor : g.cursor;
  if (diff != 0) {
    const std::int64_t low_lamp = std::countr_zero(diff) - PackedConfig::kOffset;
    const std::int64_t high_lamp = 63 - std::countl_zero(diff) - PackedConfig::kOffset;
    if (low_lamp < lo) lo = low_lamp;
    if (high_lamp > hi) hi = high_lamp;
  }
  const std::int64_t left_first = (g.cursor - lo) + (hi - lo) + (hi - h.cursor);
  const std::int64_t right_first = (hi - g.cursor) + (hi - lo) + (h.cursor - lo);
  return std::popcount(diff) + (left_first < right_first ? left_first : right_first);
}

}  // namespace lamplighter
