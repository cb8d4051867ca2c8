#pragma once

#include <cstdint>
#include <optional>

#include "lamplighter/configuration.hpp"

namespace lamplighter {

// Word-metric distance in the Cayley graph for {a, t, t^-1}.
//
// Closed form: for d = g^-1 h with lamp set S and cursor m, the distance is
// |S| plus the shortest tour from 0 that visits every lamp of S and stops at
// m. With l = min(S u {0,m}) and r = max(S u {0,m}) the tour either sweeps
// left first, (0-l) + (r-l) + (r-m), or right first, (r-0) + (r-l) + (m-l).
std::int64_t word_distance(const Configuration& g, const Configuration& h);

// Distance from the identity.
std::int64_t word_length(const Configuration& g);

// Exact distance by breadth-first search over generator moves, or nullopt
// when it exceeds `cap`. Independent of the closed form above.
std::optional<std::int64_t> bfs_distance(const Configuration& g, const Configuration& h,
                                         std::int64_t cap);

}  // namespace lamplighter
