#include "lamplighter/walk.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lamplighter {

Walk::Walk(Configuration start, std::vector<Step> steps) : steps_(std::move(steps)) {
  vertices_.reserve(steps_.size() + 1);
  vertices_.push_back(std::move(start));
  for (Step s : steps_) vertices_.push_back(apply_step(vertices_.back(), s));
}

bool Walk::is_simple() const {
  std::size_t n = vertices_.size();
  if (closed()) --n;
  std::unordered_set<Configuration, ConfigurationHash> seen;
  seen.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(vertices_[i]).second) return false;
  }
  return true;
}

Walk Walk::prefix(std::size_t count) const {
  count = std::min(count, steps_.size());
  Walk out;
  out.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(count));
  out.vertices_.assign(vertices_.begin(), vertices_.begin() + static_cast<std::ptrdiff_t>(count + 1));
  for (const auto& m : milestones_) {
    if (m.index <= count) out.add_milestone(m.label, m.index);
  }
  return out;
}

void Walk::add_milestone(std::string label, std::size_t index) {
  if (index >= vertices_.size()) {
    throw std::out_of_range("milestone '" + label + "' past the end of the walk");
  }
  if (!milestone_index_.emplace(label, index).second) {
    throw std::invalid_argument("duplicate milestone '" + label + "'");
  }
  milestones_.push_back({std::move(label), index});
}

std::optional<std::size_t> Walk::milestone(std::string_view label) const {
  auto it = milestone_index_.find(std::string(label));
  if (it == milestone_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Step> step_between(const Configuration& from, const Configuration& to) {
  if (from.cursor() == to.cursor()) {
    if (from.lit_count() + 1 != to.lit_count() && to.lit_count() + 1 != from.lit_count()) {
      return std::nullopt;
    }
    if (apply_step(from, Step::Toggle) == to) return Step::Toggle;
    return std::nullopt;
  }
  if (from.lamps() != to.lamps()) return std::nullopt;
  if (to.cursor() == from.cursor() + 1) return Step::Right;
  if (to.cursor() == from.cursor() - 1) return Step::Left;
  return std::nullopt;
}

std::vector<Step> mirror_walk(std::span<const Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(mirrored(s));
  return out;
}

std::vector<Step> cancel_backtracks(std::span<const Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (Step s : steps) {
    if (!out.empty() && out.back() == inverse(s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace lamplighter
