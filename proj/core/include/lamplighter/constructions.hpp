#pragma once

#include <cstddef>
#include <cstdint>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lamplighter/configuration.hpp"
#include "lamplighter/packed.hpp"
#include "lamplighter/walk.hpp"

namespace lamplighter {

// Largest k such that bits 0..k-1 of n are set (bit k is clear).
unsigned trailing_ones(std::uint64_t n);

// c_n: cursor at the origin, lamps at the set bits of n, nothing negative.
Configuration stage_config(std::uint64_t n);

// Moves from c_n to c_{n+1}, with k = trailing_ones(n):
//   k = 0: a single Toggle at the origin.
//   otherwise
//   A  Left x k, Toggle (marker lamp at -k);
//   B  walk back to 0, making lamp p agree with lamp p + 2k for -k < p < 0;
//   C  Toggle off and step Right over 0..k-1, then Toggle on at k (plus value n + 1);
//   D  Left x k to the origin, continue Left to -k clearing every lit lamp,
//      then Right x k home.
// At most 9k + 3 moves; touches only [-k, k].
void append_stage_steps(std::uint64_t n, std::vector<Step>& out);
Walk stage_walk(std::uint64_t n);

// The first `num_steps` moves of the half-line N = stage 0, stage 1, ...
// Milestone "c<n>" marks every stage start reached.
Walk half_quasi_line(std::size_t num_steps);

// R(-i) for i >= 0: lamps -i..-1 lit, cursor at -i.
Configuration ray_vertex(std::size_t i);

// The line R: R(-neg_len) ... R(-1), the identity, then N for `pos_steps`
// moves. Consecutive ray vertices are joined by Toggle/Right. Milestones
// "R-<i>" for the ray and "c<n>" for stage starts.
Walk quasi_line(std::size_t neg_len, std::size_t pos_steps);

// The three pieces of I_n as constructed: `first` runs N from the identity
// to c_{2^{2n+1}-1} (lamps 0..2n, cursor 0); `bridge` clears those lamps
// left to right and stops at (empty, 2n); `mirrored` is mirror_walk(first)
// replayed from there, ending at lamps 0..2n with the cursor at 2n.
struct QuasiIntervalParts {
  int n = 0;
  std::vector<Step> first;
  std::vector<Step> bridge;
  std::vector<Step> mirrored;
};

inline constexpr int kMaxQuasiN = 10;

// Throws std::invalid_argument for n < 1, ResourceLimitError for n > kMaxQuasiN.
QuasiIntervalParts quasi_interval_parts(int n);

// I_n as a simple path from the identity: the parts concatenated with the two
// immediate backtracks at the junctions cancelled. Milestones "I1_end" and
// "I2_end" mark the junctions.
Walk quasi_interval(int n);

// Return leg of C_n, from (lamps 0..2n, cursor 2n) to the identity.
// For n >= 2: light a marker at 4n+1 (beyond every lamp I_n touches), clear
// 2n..0 right to left, light a shield at -3..-1, go back to clear the marker,
// then return over the shielded row and clear the shield, entering the
// identity from (none, -1). The marker and shield keep the leg away from the
// middle of I_n, so cyclic gaps between nearby vertices stay bounded in n.
// n = 1 uses a fixed 19-move leg that enters from (none, 1), since (none, -1)
// is y_1.
std::vector<Step> circle_closing(int n);

// C_n: I_n followed by circle_closing(n); closed at the identity. Milestones
// "I1_end", "I2_end", "I3_end".
Walk quasi_circle(int n);

struct ProbeSet {
  int n = 0;
  Configuration a_n;  // lamps 0..2n-1, cursor n
  Configuration b_n;  // no lamps, cursor -n
  Configuration x_n;  // lamps 0..2n, cursor n
  Configuration y_n;  // same as b_n
};

ProbeSet probes(int n);

// Fast enumeration of N in packed form: calls visit(vertex) for c_first and
// then for every vertex reached by the moves of stages first..last-1 (so the
// final call is for c_last). Requires last <= 2^31.
template <typename Visitor>
void for_each_stage_vertex(std::uint64_t first, std::uint64_t last, Visitor&& visit) {
  if (last > (std::uint64_t{1} << 31)) {
    throw std::out_of_range("for_each_stage_vertex: stage bound beyond packed window");
  }
  PackedConfig v;
  for (std::uint64_t rest = first; rest != 0; rest &= rest - 1) {
    v.lamps |= PackedConfig::bit(std::countr_zero(rest));
  }
  visit(std::as_const(v));
  std::vector<Step> buffer;
  for (std::uint64_t n = first; n < last; ++n) {
    buffer.clear();
    append_stage_steps(n, buffer);
    for (Step s : buffer) {
      v = v.stepped(s);
      visit(std::as_const(v));
    }
  }
}

}  // namespace lamplighter
