#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>

#include "lamplighter/path_spec.hpp"
#include "lamplighter/walk.hpp"

namespace lamplighter::cli {

// What a walk file claims to hold. `n` is the I_n / C_n parameter, the
// negative ray length for R, and absent for N.
struct WalkIdentity {
  PathKind kind = PathKind::N;
  std::optional<int> n;
  std::size_t steps = 0;

  friend bool operator==(const WalkIdentity&, const WalkIdentity&) = default;
};

struct LoadedWalk {
  WalkIdentity identity;
  Walk walk;
};

// Line 1: {"kind":..,"n":..,"steps":..}; then one canonical configuration
// per vertex; then {"milestones":{label: index, ...}}.
void write_walk(std::ostream& out, const WalkIdentity& id, const Walk& walk);

// Throws InputError (position = 1-based line number) on any malformed line,
// wrong vertex count, non-adjacent consecutive vertices or missing trailer.
LoadedWalk read_walk(std::istream& in);

}  // namespace lamplighter::cli
