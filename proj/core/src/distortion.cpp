#include "lamplighter/distortion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lamplighter/ball.hpp"
#include "lamplighter/constructions.hpp"
#include "lamplighter/metric.hpp"

namespace lamplighter {

namespace {

std::int64_t index_gap(std::size_t i, std::size_t j, std::size_t cycle, IndexMetric metric) {
  const std::size_t d = i > j ? i - j : j - i;
  if (metric == IndexMetric::Linear) return static_cast<std::int64_t>(d);
  return static_cast<std::int64_t>(std::min(d, cycle - d));
}

// gap_at[M] holds the largest gap among pairs at distance exactly M; turn it
// into "distance at most M".
void running_max(std::vector<std::int64_t>& gap) {
  for (std::size_t m = 1; m < gap.size(); ++m) gap[m] = std::max(gap[m], gap[m - 1]);
}

}  // namespace

DistortionProfile profile_walk(const Walk& walk, int m_max, ProfileMode mode) {
  if (m_max < 0) throw std::invalid_argument("M_max must be non-negative");
  const bool cyclic = walk.closed();
  const auto& vertices = walk.vertices();
  const std::size_t count = cyclic ? vertices.size() - 1 : vertices.size();

  DistortionProfile profile;
  profile.index_limit = count - 1;
  profile.metric = cyclic ? IndexMetric::Cyclic : IndexMetric::Linear;
  std::vector<std::int64_t> gap(static_cast<std::size_t>(m_max) + 1, 0);

  if (mode == ProfileMode::Pairwise) {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        const std::int64_t d = word_distance(vertices[i], vertices[j]);
        if (d > m_max) continue;
        auto& slot = gap[static_cast<std::size_t>(d)];
        slot = std::max(slot, index_gap(i, j, count, profile.metric));
      }
    }
  } else {
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> where;
    where.reserve(count);
    for (std::size_t i = 0; i < count; ++i) where.emplace(vertices[i], i);
    const Ball around = Ball::build(identity(), m_max);
    std::vector<Configuration> offsets;
    offsets.reserve(around.size());
    for (std::size_t k = 0; k < around.size(); ++k) offsets.push_back(around.member(k));

    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t k = 0; k < offsets.size(); ++k) {
        auto it = where.find(compose(vertices[i], offsets[k]));
        if (it == where.end()) continue;
        auto& slot = gap[static_cast<std::size_t>(around.distance(k))];
        slot = std::max(slot, index_gap(i, it->second, count, profile.metric));
      }
    }
  }
  running_max(gap);
  profile.gap = std::move(gap);
  return profile;
}

Walk profile_window(const PathSpec& spec, std::size_t index_limit) {
  switch (spec.kind) {
    case PathKind::N: return half_quasi_line(index_limit);
    case PathKind::R: {
      const std::size_t rays = index_limit / 4;
      return quasi_line(rays, index_limit - 2 * rays);
    }
    case PathKind::I: return quasi_interval(spec.n).prefix(index_limit);
    case PathKind::C: return quasi_circle(spec.n);
  }
  throw std::invalid_argument("unknown path kind");
}

DistortionProfile distortion_profile(const PathSpec& spec, std::size_t index_limit, int m_max,
                                     ProfileMode mode) {
  if (index_limit < 2) throw std::invalid_argument("index_limit must be at least 2");
  DistortionProfile profile = profile_walk(profile_window(spec, index_limit), m_max, mode);
  profile.path = spec.label();
  return profile;
}

FamilyProfile circle_family_distortion(std::span<const int> ns, int m_max, ProfileMode mode) {
  if (ns.empty()) throw std::invalid_argument("empty circle family");
  FamilyProfile family;
  family.ns.assign(ns.begin(), ns.end());
  family.envelope.assign(static_cast<std::size_t>(m_max) + 1, 0);
  family.attained_by.assign(static_cast<std::size_t>(m_max) + 1, 0);
  for (int n : ns) {
    DistortionProfile p = profile_walk(quasi_circle(n), m_max, mode);
    p.path = PathSpec::circle(n).label();
    family.members.push_back(std::move(p));
  }
  for (std::size_t m = 0; m < family.envelope.size(); ++m) {
    bool first = true;
    for (std::size_t k = 0; k < family.members.size(); ++k) {
      const std::int64_t value = family.members[k].gap[m];
      const int n = family.ns[k];
      if (first || value > family.envelope[m] ||
          (value == family.envelope[m] && n < family.attained_by[m])) {
        family.envelope[m] = value;
        family.attained_by[m] = n;
        first = false;
      }
    }
  }
  return family;
}

std::string to_csv(const DistortionProfile& profile) {
  std::ostringstream out;
  out << "M,D\n";
  for (std::size_t m = 0; m < profile.gap.size(); ++m) out << m << ',' << profile.gap[m] << '\n';
  return out.str();
}

std::string to_csv(const FamilyProfile& family) {
  std::ostringstream out;
  out << "M,D,n_attaining\n";
  for (std::size_t m = 0; m < family.envelope.size(); ++m) {
    out << m << ',' << family.envelope[m] << ',' << family.attained_by[m] << '\n';
  }
  return out.str();
}

}  // namespace lamplighter
