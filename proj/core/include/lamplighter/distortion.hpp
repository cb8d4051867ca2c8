#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lamplighter/path_spec.hpp"
#include "lamplighter/walk.hpp"

namespace lamplighter {

enum class IndexMetric { Linear, Cyclic };

// How pairs at ambient distance <= M are found.
//   Neighborhood: for each vertex v, look up v*g for every g in B(e, M_max)
//     in a vertex -> index table. Exact and linear in the path length.
//   Pairwise: closed-form distance for every index pair. Quadratic; the
//     reference the neighbourhood mode is checked against.
enum class ProfileMode { Neighborhood, Pairwise };

// D(M) for M = 0..m_max: the largest index gap |i - j| (cyclic gap for
// closed paths) over vertex pairs with word distance <= M.
struct DistortionProfile {
  std::string path;  // PathSpec label
  std::size_t index_limit = 0;
  IndexMetric metric = IndexMetric::Linear;
  std::vector<std::int64_t> gap;  // gap[M]

  friend bool operator==(const DistortionProfile&, const DistortionProfile&) = default;
};

// Profile of an explicit walk. A closed walk is profiled cyclically over
// its distinct vertices; otherwise vertices 0..step_count() are used.
DistortionProfile profile_walk(const Walk& walk, int m_max,
                               ProfileMode mode = ProfileMode::Neighborhood);

// The walk profiled for a path: N uses its first index_limit moves; R is
// centred, with 2*(index_limit/4) ray moves and the rest on N; I_n is cut
// to index_limit moves; C_n is always taken whole (a cyclic gap needs the
// full cycle).
Walk profile_window(const PathSpec& spec, std::size_t index_limit);

// Throws std::invalid_argument for index_limit < 2 or m_max < 0.
DistortionProfile distortion_profile(const PathSpec& spec, std::size_t index_limit, int m_max,
                                     ProfileMode mode = ProfileMode::Neighborhood);

struct FamilyProfile {
  std::vector<int> ns;
  std::vector<DistortionProfile> members;  // one per n, same order
  std::vector<std::int64_t> envelope;      // h_emp(M) = max over n of D_n(M)
  std::vector<int> attained_by;            // smallest n reaching envelope[M]
};

// Cyclic profiles of C_n for each n and their pointwise maximum.
FamilyProfile circle_family_distortion(std::span<const int> ns, int m_max,
                                       ProfileMode mode = ProfileMode::Neighborhood);

// CSV with header "M,D" (or "M,D,n_attaining" for families); '\n' line ends.
std::string to_csv(const DistortionProfile& profile);
std::string to_csv(const FamilyProfile& family);

}  // namespace lamplighter
