#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamplighter/distortion.hpp"
#include "lamplighter/path_spec.hpp"

namespace lamplighter::cli {

enum class Command { Walk, Dist, Ball, Profile, Separate, Verify };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
};

struct Caps {
  int radius = 12;
  std::size_t members = 5'000'000;
  std::size_t index_limit = 10'000;
};

struct RunConfig {
  Command command = Command::Verify;

  std::optional<PathKind> kind;
  std::optional<int> n;               // I_n / C_n parameter; negative ray length for R
  std::optional<std::size_t> steps;   // walk length (N, R; optional cut for I)

  std::optional<std::string> from;    // dist
  std::optional<std::string> to;
  std::optional<std::string> center;  // ball (default identity)

  std::optional<int> radius;
  int thickening = 0;                 // K
  std::optional<std::size_t> index_limit;
  int m_max = 4;
  ProfileMode mode = ProfileMode::Neighborhood;
  std::vector<int> family;            // profile of the C_n family

  std::optional<int> probe_n;         // separate: probes(probe_n)
  std::optional<std::string> first;   // or explicit probes
  std::optional<std::string> second;

  std::string out = "-";
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;

  std::string suite = "all";          // verify: "all" or a comma list of criteria
  bool metric_fault = false;          // verify: swap in a broken distance formula

  Caps caps;
};

// Bad flag combination or value; `flag` names the offending option.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string flag, const std::string& what)
      : std::runtime_error(flag + ": " + what), flag_(std::move(flag)) {}
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

// Throws UsageError for invalid parameters, before any computation.
void validate(const RunConfig& config);

// Executes one command. Output goes to config.out ("-" = `out`), messages
// and warnings to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lamplighter::cli
