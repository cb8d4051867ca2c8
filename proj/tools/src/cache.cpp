#include "lamplighter/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <system_error>

#include "lamplighter/constructions.hpp"
#include "lamplighter/errors.hpp"

namespace lamplighter::cli {

namespace fs = std::filesystem;

namespace {

std::string name_for(PathKind kind, std::optional<int> n, std::size_t steps) {
  return std::string(to_string(kind)) + "-" + (n ? std::to_string(*n) : "null") + "-" +
         std::to_string(steps) + ".walk";
}

// Parses "<kind>-<n>-<steps>.walk" back; nullopt for foreign files.
std::optional<WalkIdentity> parse_name(const std::string& name) {
  if (name.size() < 6 || !name.ends_with(".walk")) return std::nullopt;
  const std::string stem = name.substr(0, name.size() - 5);
  const auto a = stem.find('-');
  const auto b = stem.rfind('-');
  if (a == std::string::npos || a == b) return std::nullopt;
  try {
    WalkIdentity id;
    id.kind = parse_path_kind(stem.substr(0, a));
    const std::string n = stem.substr(a + 1, b - a - 1);
    if (n != "null") id.n = std::stoi(n);
    id.steps = std::stoull(stem.substr(b + 1));
    if (name_for(id.kind, id.n, id.steps) != name) return std::nullopt;
    return id;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Configuration expected_start(PathKind kind, std::optional<int> n) {
  if (kind == PathKind::R) return ray_vertex(static_cast<std::size_t>(n.value_or(0)));
  return identity();
}

WalkCache::WalkCache(fs::path dir, WarningSink warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

fs::path WalkCache::default_dir() {
  if (const char* env = std::getenv("LL_COARSE_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "ll-coarse";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "ll-coarse";
  }
  return ".ll-coarse-cache";
}

fs::path WalkCache::file_for(const WalkIdentity& id) const {
  return dir_ / name_for(id.kind, id.n, id.steps);
}

void WalkCache::warn(const std::string& message) const {
  if (warn_) warn_(message);
}

std::optional<Walk> WalkCache::load_checked(const fs::path& file,
                                            const WalkIdentity& expected) const {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    LoadedWalk loaded = read_walk(in);
    if (!(loaded.identity == expected)) {
      warn("cache entry " + file.string() + " has a mismatched header; ignoring it");
      return std::nullopt;
    }
    if (!(loaded.walk.start() == expected_start(expected.kind, expected.n))) {
      warn("cache entry " + file.string() + " starts at the wrong vertex; ignoring it");
      return std::nullopt;
    }
    if (expected.kind == PathKind::C && !loaded.walk.closed()) {
      warn("cache entry " + file.string() + " is not closed; ignoring it");
      return std::nullopt;
    }
    return std::move(loaded.walk);
  } catch (const InputError& e) {
    warn("cache entry " + file.string() + " is corrupt (" + e.what() + "); ignoring it");
    return std::nullopt;
  }
}

std::optional<Walk> WalkCache::lookup(PathKind kind, std::optional<int> n,
                                      std::optional<std::size_t> steps) const {
  std::error_code ec;
  if (steps) {
    const WalkIdentity id{kind, n, *steps};
    if (fs::exists(file_for(id), ec)) {
      if (auto hit = load_checked(file_for(id), id)) return hit;
    }
    if (kind != PathKind::N) return std::nullopt;
  }
  if (!fs::is_directory(dir_, ec)) return std::nullopt;

  // Candidates: same kind and n; for N any longer walk, shortest first.
  std::optional<WalkIdentity> best;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    const auto id = parse_name(entry.path().filename().string());
    if (!id || id->kind != kind || id->n != n) continue;
    if (steps && id->steps <= *steps) continue;
    if (!best || id->steps < best->steps) best = id;
  }
  if (!best) return std::nullopt;
  auto hit = load_checked(file_for(*best), *best);
  if (!hit) return std::nullopt;
  if (steps) return hit->prefix(*steps);
  return hit;
}

void WalkCache::store(const WalkIdentity& id, const Walk& walk) const {
  fs::create_directories(dir_);
  const fs::path target = file_for(id);
  std::random_device rd;
  const fs::path temp = dir_ / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
    write_walk(out, id, walk);
    out.flush();
    if (!out) {
      out.close();
      fs::remove(temp);
      throw std::runtime_error("failed writing cache file " + temp.string());
    }
  }
  fs::rename(temp, target);
}

}  // namespace lamplighter::cli
