#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamplighter/ball.hpp"
#include "lamplighter/configuration.hpp"
#include "lamplighter/packed.hpp"
#include "lamplighter/path_spec.hpp"
#include "lamplighter/walk.hpp"

namespace lamplighter {

// Stage enumeration of N is bounded by 2^max_stage_exponent stages; larger
// requests raise ResourceLimitError instead of running for hours.
inline constexpr unsigned kDefaultMaxStageExponent = 26;

// Finite walk for I_n / C_n.
Walk finite_path(const PathSpec& spec);

// Every vertex of the path within word length `radius` of the identity, in
// packed absolute coordinates, sorted by (cursor, lamps).
//
// Truncation of N: every vertex of stage n >= 1 has word length at least
// floor(log2 n), so stages n < 2^(radius+1) suffice. `stage_bound` overrides
// that bound (used to check it). R adds the ray R(-i) for 2i - 1 <= radius.
std::vector<PackedConfig> path_vertices_within(const PathSpec& spec, int radius,
                                               std::optional<std::uint64_t> stage_bound = {});

// Vertices of the path inside `ball`, which must be centered at the identity.
std::vector<Configuration> path_in_ball(const PathSpec& spec, const Ball& ball,
                                        std::optional<std::uint64_t> stage_bound = {});

// min over path vertices w of word_distance(v, w) if that is <= cap, else
// nullopt. For N and R, stages n with floor(log2 n) > |v| + cap are skipped
// (they cannot come within cap of v).
std::optional<std::int64_t> distance_to_path(const Configuration& v, const PathSpec& spec,
                                             std::int64_t cap,
                                             unsigned max_stage_exponent = kDefaultMaxStageExponent);

}  // namespace lamplighter
