#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace lamplighter {

using Position = std::int64_t;

// Generators of the lamplighter group: Toggle is `a`, Right is `t`, Left is `t^-1`.
enum class Step : std::uint8_t { Toggle, Right, Left };

inline constexpr Step kAllSteps[] = {Step::Toggle, Step::Right, Step::Left};

constexpr Step inverse(Step s) {
  switch (s) {
    case Step::Right: return Step::Left;
    case Step::Left: return Step::Right;
    default: return Step::Toggle;
  }
}

// Reflection of a move: directions swap, toggles stay.
constexpr Step mirrored(Step s) { return inverse(s); }

std::string_view to_string(Step s);

// A lamplighter group element: the finite set of lit lamps and the cursor.
//
// Lamps are kept sorted ascending and duplicate-free, so two configurations
// compare equal exactly when they denote the same group element.
class Configuration {
 public:
  Configuration() = default;

  // Throws std::invalid_argument on duplicated positions; order is free.
  Configuration(std::vector<Position> lamps, Position cursor);
  Configuration(std::initializer_list<Position> lamps, Position cursor)
      : Configuration(std::vector<Position>(lamps), cursor) {}

  // Caller guarantees `lamps` is strictly ascending.
  static Configuration from_sorted(std::vector<Position> lamps, Position cursor);

  const std::vector<Position>& lamps() const noexcept { return lamps_; }
  Position cursor() const noexcept { return cursor_; }
  std::size_t lit_count() const noexcept { return lamps_.size(); }
  bool is_lit(Position p) const;

  // Canonical total order: lamps lexicographically, then cursor.
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Position> lamps_;
  Position cursor_ = 0;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

inline Configuration identity() { return {}; }

// The group element of a single generator.
Configuration generator_element(Step s);

Configuration apply_step(const Configuration& c, Step s);

// Product in (+_Z Z_2) x| Z: lamps of h are shifted by g's cursor and added mod 2.
Configuration compose(const Configuration& g, const Configuration& h);

Configuration invert(const Configuration& g);

// Binary numbers read off the lamps: `plus` from positions >= 0 (bit p at
// position p), `minus` from positions < 0 (bit -p-1 at position p).
struct DyadicViews {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  friend bool operator==(const DyadicViews&, const DyadicViews&) = default;
};

// Throws std::overflow_error when a lamp lies outside [-64, 63].
DyadicViews dyadic_views(const Configuration& c);

}  // namespace lamplighter
