#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lamplighter/configuration.hpp"

namespace lamplighter {

struct Milestone {
  std::string label;
  std::size_t index = 0;
  friend bool operator==(const Milestone&, const Milestone&) = default;
};

// A path in the Cayley graph: a start vertex and the generator moves taken
// from it. vertices()[i + 1] == apply_step(vertices()[i], steps()[i]).
class Walk {
 public:
  Walk() : Walk(identity(), {}) {}
  Walk(Configuration start, std::vector<Step> steps);

  const Configuration& start() const noexcept { return vertices_.front(); }
  const Configuration& end() const noexcept { return vertices_.back(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  const std::vector<Configuration>& vertices() const noexcept { return vertices_; }
  std::size_t step_count() const noexcept { return steps_.size(); }

  // True when the last vertex equals the first (and there is at least one step).
  bool closed() const noexcept { return !steps_.empty() && start() == end(); }

  // All vertices pairwise distinct; for closed walks the repeated endpoint is exempt.
  bool is_simple() const;

  // First walk of `count` steps; milestones past the cut are dropped.
  Walk prefix(std::size_t count) const;

  void add_milestone(std::string label, std::size_t index);
  const std::vector<Milestone>& milestones() const noexcept { return milestones_; }
  std::optional<std::size_t> milestone(std::string_view label) const;

 private:
  std::vector<Step> steps_;
  std::vector<Configuration> vertices_;
  std::vector<Milestone> milestones_;  // insertion order
  std::unordered_map<std::string, std::size_t> milestone_index_;
};

// The move taking `from` to `to`, if they are adjacent.
std::optional<Step> step_between(const Configuration& from, const Configuration& to);

// Reflect every move: Right and Left swap, toggles stay, order kept.
std::vector<Step> mirror_walk(std::span<const Step> steps);

// Free reduction: repeatedly cancels a move followed by its inverse.
std::vector<Step> cancel_backtracks(std::span<const Step> steps);

}  // namespace lamplighter
