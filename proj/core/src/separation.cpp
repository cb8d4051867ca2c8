#include "lamplighter/separation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "lamplighter/codec.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/packed.hpp"
#include "lamplighter/path_queries.hpp"

namespace lamplighter {

namespace {

ComponentDecomposition decompose_mask(const Ball& ball, const std::vector<bool>& removed) {
  const std::size_t size = ball.size();
  const auto members = ball.relative_members();
  ComponentDecomposition out;
  out.component_of.assign(size, std::nullopt);

  // Multi-source BFS from the removed set, inside the ball.
  constexpr std::int64_t kUnreached = -1;
  std::vector<std::int64_t> depth(size, kUnreached);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < size; ++i) {
    if (removed[i]) {
      depth[i] = 0;
      queue.push_back(i);
      ++out.removed_in_ball;
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (Step s : kAllSteps) {
      auto w = ball.index_of_relative(members[u].stepped(s));
      if (w && depth[*w] == kUnreached) {
        depth[*w] = depth[u] + 1;
        queue.push_back(*w);
      }
    }
  }

  struct Raw {
    std::size_t size = 0;
    std::size_t best = 0;
    Configuration best_config;
    std::int64_t deepest = kUnreached;
  };
  std::vector<Raw> raw;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < size; ++seed) {
    if (removed[seed] || out.component_of[seed]) continue;
    const std::size_t id = raw.size();
    Raw comp;
    comp.best = seed;
    comp.best_config = ball.member(seed);
    out.component_of[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++comp.size;
      comp.deepest = std::max(comp.deepest, depth[u]);
      if (u != seed) {
        Configuration c = ball.member(u);
        if (c < comp.best_config) {
          comp.best = u;
          comp.best_config = std::move(c);
        }
      }
      for (Step s : kAllSteps) {
        auto w = ball.index_of_relative(members[u].stepped(s));
        if (w && !removed[*w] && !out.component_of[*w]) {
          out.component_of[*w] = id;
          stack.push_back(*w);
        }
      }
    }
    raw.push_back(std::move(comp));
  }

  // Renumber by representative.
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw[a].best_config < raw[b].best_config;
  });
  std::vector<std::size_t> renumber(raw.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const Raw& r = raw[order[rank]];
    renumber[order[rank]] = rank;
    Component c;
    c.id = rank;
    c.size = r.size;
    c.representative = r.best_config;
    if (r.deepest != kUnreached) c.max_distance_to_removed = r.deepest;
    out.components.push_back(std::move(c));
  }
  for (auto& label : out.component_of) {
    if (label) label = renumber[*label];
  }
  return out;
}

std::vector<bool> mask_of(const Ball& ball, std::span<const Configuration> removed) {
  std::vector<bool> mask(ball.size(), false);
  for (const auto& v : removed) {
    if (auto i = ball.index_of(v)) mask[*i] = true;
  }
  return mask;
}

}  // namespace

ComponentDecomposition decompose(const Ball& ball, std::span<const Configuration> removed) {
  return decompose_mask(ball, mask_of(ball, removed));
}

std::vector<Component> components_after_removal(const Ball& ball,
                                                std::span<const Configuration> removed) {
  return decompose(ball, removed).components;
}

SeparationReport separation_report(const PathSpec& path, int thickening, int radius,
                                   const Configuration& first, const Configuration& second,
                                   std::size_t member_cap) {
  if (thickening < 0) throw std::invalid_argument("K must be non-negative");
  if (radius < 1) throw std::invalid_argument("R must be positive");
  std::vector<Configuration> obstacle;
  for (const auto& v : path_vertices_within(path, radius + thickening)) {
    obstacle.push_back(v.unpack());
  }
  return separation_report(path.label(), obstacle, thickening, radius, first, second, member_cap);
}

SeparationReport separation_report(std::string label, std::span<const Configuration> obstacle,
                                   int thickening, int radius, const Configuration& first,
                                   const Configuration& second, std::size_t member_cap) {
  if (thickening < 0) throw std::invalid_argument("K must be non-negative");
  if (radius < 1) throw std::invalid_argument("R must be positive");
  const Ball ball = Ball::build(identity(), radius, member_cap);

  SeparationReport report;
  report.obstacle = std::move(label);
  report.thickening = thickening;
  report.radius = radius;
  report.ball_size = ball.size();

  // K-neighbourhood: BFS from the obstacle, confined to B(e, R + K), which
  // contains every geodesic from an obstacle vertex to a ball member within K.
  const std::int64_t outer = static_cast<std::int64_t>(radius) + thickening;
  std::vector<bool> removed(ball.size(), false);
  std::unordered_set<PackedConfig, PackedConfigHash> seen;
  std::vector<PackedConfig> frontier;
  for (const auto& v : obstacle) {
    if (word_length(v) > outer) continue;
    auto p = PackedConfig::pack(v);
    if (!p) continue;
    if (ball.contains(v)) ++report.obstacle_size;
    if (seen.insert(*p).second) frontier.push_back(*p);
  }
  const PackedConfig origin{};
  for (int depth = 0; depth < thickening && !frontier.empty(); ++depth) {
    std::vector<PackedConfig> next;
    for (const auto& u : frontier) {
      for (Step s : kAllSteps) {
        const PackedConfig w = u.stepped(s);
        if (word_distance(origin, w) <= outer && seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& v : seen) {
    if (auto i = ball.index_of_relative(v)) removed[*i] = true;
  }

  ComponentDecomposition parts = decompose_mask(ball, removed);
  report.removed_size = parts.removed_in_ball;
  report.components = std::move(parts.components);

  for (const Configuration* probe : {&first, &second}) {
    auto index = ball.index_of(*probe);
    if (!index) {
      throw ProbeOutsideBallError("probe " + encode(*probe) + " lies outside B(e, " +
                                  std::to_string(radius) + ")");
    }
    if (removed[*index]) {
      throw ProbeInObstacleError("probe " + encode(*probe) +
                                 " lies in the obstacle neighbourhood");
    }
    ProbeReport pr;
    pr.probe = *probe;
    pr.component = parts.component_of[*index];
    // Obstacle vertices farther than R + K from e are missing, so the
    // minimum is exact only up to R + K - |probe|.
    const std::int64_t trusted = outer - word_length(*probe);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& v : obstacle) best = std::min(best, word_distance(*probe, v));
    if (best <= trusted) {
      pr.distance = best;
      pr.exact = true;
    } else {
      pr.distance = trusted + 1;
      pr.exact = false;
    }
    report.probes.push_back(std::move(pr));
  }
  report.separated = report.probes[0].component && report.probes[1].component &&
                     *report.probes[0].component != *report.probes[1].component;
  return report;
}

nlohmann::json to_json(const SeparationReport& report) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : report.components) {
    nlohmann::json entry = {{"id", c.id},
                            {"size", c.size},
                            {"representative", to_json(c.representative)},
                            {"max_distance_to_obstacle", nullptr}};
    if (c.max_distance_to_removed) entry["max_distance_to_obstacle"] = *c.max_distance_to_removed;
    components.push_back(std::move(entry));
  }
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : report.probes) {
    nlohmann::json entry = {{"configuration", to_json(p.probe)},
                            {"component", nullptr},
                            {"distance_to_obstacle", p.distance},
                            {"distance_exact", p.exact}};
    if (p.component) entry["component"] = *p.component;
    probes.push_back(std::move(entry));
  }
  return nlohmann::json{{"obstacle", {{"path", report.obstacle}, {"size", report.obstacle_size}}},
                        {"K", report.thickening},
                        {"R", report.radius},
                        {"ball_size", report.ball_size},
                        {"removed_size", report.removed_size},
                        {"components", std::move(components)},
                        {"probes", std::move(probes)},
                        {"verdict", report.verdict()}};
}

}  // namespace lamplighter
