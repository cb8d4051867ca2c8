// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only when every criterion passes.

#include <iostream>

#include "lamplighter/cli/verify.hpp"

int main() {
  lamplighter::cli::VerifyOptions options;
  const auto results = lamplighter::cli::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << lamplighter::cli::format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "PASS" : "FAIL") << ": " << results.size() - failed << "/"
            << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
