#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lamplighter/cli/walk_io.hpp"
#include "lamplighter/walk.hpp"

namespace lamplighter::cli {

// On-disk store of generated walks, one file per identity, named
// "<kind>-<n|null>-<steps>.walk". Entries are checked before use; a corrupt
// or truncated file counts as a miss and is reported through `warn`.
class WalkCache {
 public:
  using WarningSink = std::function<void(std::string_view)>;

  explicit WalkCache(std::filesystem::path dir, WarningSink warn = {});

  // LL_COARSE_CACHE_DIR if set, else $XDG_CACHE_HOME/ll-coarse, else
  // ~/.cache/ll-coarse, else ./.ll-coarse-cache.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path file_for(const WalkIdentity& id) const;

  // Exact hit, or for N the prefix of the shortest longer cached N walk.
  // With `steps` unset (I_n and C_n, whose length is fixed by n) any entry
  // for the kind and n is accepted.
  std::optional<Walk> lookup(PathKind kind, std::optional<int> n,
                             std::optional<std::size_t> steps) const;

  // Write to a temporary name in the same directory, then rename.
  void store(const WalkIdentity& id, const Walk& walk) const;

 private:
  std::optional<Walk> load_checked(const std::filesystem::path& file,
                                   const WalkIdentity& expected) const;
  void warn(const std::string& message) const;

  std::filesystem::path dir_;
  WarningSink warn_;
};

// The vertex a walk of this identity must start from.
Configuration expected_start(PathKind kind, std::optional<int> n);

}  // namespace lamplighter::cli
