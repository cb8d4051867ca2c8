#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lamplighter {

// Which explicit path: the half-line N, the line R, an interval I_n or a circle C_n.
enum class PathKind { N, R, I, C };

std::string_view to_string(PathKind kind);
// Throws std::invalid_argument for anything but "N", "R", "I", "C".
PathKind parse_path_kind(std::string_view text);

struct PathSpec {
  PathKind kind = PathKind::N;
  int n = 0;  // I_n / C_n only

  static PathSpec half_line() { return {PathKind::N, 0}; }
  static PathSpec line() { return {PathKind::R, 0}; }
  static PathSpec interval(int n) { return {PathKind::I, n}; }
  static PathSpec circle(int n) { return {PathKind::C, n}; }

  bool finite() const { return kind == PathKind::I || kind == PathKind::C; }
  std::optional<int> parameter() const {
    return finite() ? std::optional<int>(n) : std::nullopt;
  }
  // "N", "R", "I3", "C2"
  std::string label() const;

  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

}  // namespace lamplighter
