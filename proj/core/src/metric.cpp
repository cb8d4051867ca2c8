#include "lamplighter/metric.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace lamplighter {

namespace {

// Tour cost from `start` covering [lo, hi] and ending at `end`.
std::int64_t sweep_cost(std::int64_t lo, std::int64_t hi, std::int64_t start, std::int64_t end) {
  const std::int64_t left_first = (start - lo) + (hi - lo) + (hi - end);
  const std::int64_t right_first = (hi - start) + (hi - lo) + (end - lo);
  return std::min(left_first, right_first);
}

}  // namespace

std::int64_t word_distance(const Configuration& g, const Configuration& h) {
  // Work in absolute coordinates: the lamps that differ must be toggled, and
  // the cursor travels from g.cursor to h.cursor through all of them.
  const auto& a = g.lamps();
  const auto& b = h.lamps();
  std::int64_t count = 0;
  std::int64_t lo = std::min(g.cursor(), h.cursor());
  std::int64_t hi = std::max(g.cursor(), h.cursor());
  auto note = [&](Position p) {
    ++count;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      note(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      note(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  return count + sweep_cost(lo, hi, g.cursor(), h.cursor());
}

std::int64_t word_length(const Configuration& g) { return word_distance(identity(), g); }

std::optional<std::int64_t> bfs_distance(const Configuration& g, const Configuration& h,
                                         std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("bfs_distance: negative cap");
  if (g == h) return 0;
  std::unordered_set<Configuration, ConfigurationHash> seen{g};
  std::vector<Configuration> frontier{g};
  for (std::int64_t depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    std::vector<Configuration> next;
    for (const auto& c : frontier) {
      for (Step s : kAllSteps) {
        Configuration w = apply_step(c, s);
        if (w == h) return depth;
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace lamplighter
