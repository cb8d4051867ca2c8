#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "lamplighter/configuration.hpp"

namespace lamplighter::cli {

using DistanceFn = std::function<std::int64_t(const Configuration&, const Configuration&)>;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::set<int> criteria;  // empty = all ten
  DistanceFn distance;     // defaults to word_distance
  std::ostream* progress = nullptr;  // one line per finished criterion
};

inline constexpr int kCriterionCount = 10;

// Runs the acceptance criteria in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

// "criterion 3 PASS  N well-formedness: ... (1.2 s)"
std::string format_result(const CriterionResult& result);

// Left-first-sweep-only distance: a plausible slip in the closed form, used
// to check that the suite notices a wrong metric.
std::int64_t faulty_word_distance(const Configuration& g, const Configuration& h);

}  // namespace lamplighter::cli
