#include "lamplighter/cli/run.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lamplighter/ball.hpp"
#include "lamplighter/cli/cache.hpp"
#include "lamplighter/cli/verify.hpp"
#include "lamplighter/cli/walk_io.hpp"
#include "lamplighter/codec.hpp"
#include "lamplighter/constructions.hpp"
#include "lamplighter/errors.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/separation.hpp"

namespace lamplighter::cli {

namespace {

Configuration parse_configuration(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(flag, "required");
  try {
    return decode(*text);
  } catch (const InputError& e) {
    throw UsageError(flag, e.what());
  }
}

PathSpec path_of(const RunConfig& c) {
  switch (*c.kind) {
    case PathKind::N: return PathSpec::half_line();
    case PathKind::R: return PathSpec::line();
    case PathKind::I: return PathSpec::interval(*c.n);
    case PathKind::C: return PathSpec::circle(*c.n);
  }
  throw UsageError("--kind", "unknown path kind");
}

void need_kind(const RunConfig& c) {
  if (!c.kind) throw UsageError("--kind", "required");
  const bool finite = *c.kind == PathKind::I || *c.kind == PathKind::C;
  if (finite && !c.n) throw UsageError("--n", "required for I and C");
  if (finite && (*c.n < 1 || *c.n > kMaxQuasiN)) {
    throw UsageError("--n", "must be in 1.." + std::to_string(kMaxQuasiN));
  }
  if (*c.kind == PathKind::N && c.n) throw UsageError("--n", "not used with N");
  if (*c.kind == PathKind::R && c.n && *c.n < 0) throw UsageError("--n", "must be non-negative");
}

// Where output goes: stdout for "-", else a file written in one piece.
class Sink {
 public:
  Sink(const std::string& target, std::ostream& stdout_stream)
      : target_(target), stdout_(stdout_stream) {}
  std::ostream& stream() { return target_ == "-" ? stdout_ : buffer_; }
  void commit() {
    if (target_ == "-") return;
    std::ofstream file(target_, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("--out", "cannot open " + target_);
    file << buffer_.str();
    if (!file) throw UsageError("--out", "failed writing " + target_);
  }

 private:
  std::string target_;
  std::ostream& stdout_;
  std::ostringstream buffer_;
};

std::size_t ray_length(const RunConfig& c) {
  return c.n ? static_cast<std::size_t>(*c.n) : *c.steps / 4;
}

Walk generate(const RunConfig& c) {
  switch (*c.kind) {
    case PathKind::N: return half_quasi_line(*c.steps);
    case PathKind::R: {
      const std::size_t neg = ray_length(c);
      return quasi_line(neg, *c.steps - 2 * neg);
    }
    case PathKind::I: {
      Walk w = quasi_interval(*c.n);
      return c.steps ? w.prefix(*c.steps) : w;
    }
    case PathKind::C: return quasi_circle(*c.n);
  }
  throw UsageError("--kind", "unknown path kind");
}

int do_walk(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const bool stepped = *c.kind == PathKind::N || *c.kind == PathKind::R;
  std::optional<int> n = c.n;
  if (*c.kind == PathKind::R) n = static_cast<int>(ray_length(c));
  // A cut I_n is not cached: the file name could not tell it from the full walk.
  const bool cacheable = c.use_cache && (stepped || !c.steps);

  std::optional<Walk> walk;
  std::optional<WalkCache> cache;
  if (cacheable) {
    cache.emplace(c.cache_dir.value_or(WalkCache::default_dir()),
                  [&err](std::string_view m) { err << "warning: " << m << '\n'; });
    walk = cache->lookup(*c.kind, n, stepped ? c.steps : std::nullopt);
  }
  const bool hit = walk.has_value();
  if (!walk) walk = generate(c);
  const WalkIdentity id{*c.kind, n, walk->step_count()};
  if (cache && !hit) {
    try {
      cache->store(id, *walk);
    } catch (const std::exception& e) {
      err << "warning: could not store walk in cache: " << e.what() << '\n';
    }
  }
  Sink sink(c.out, out);
  write_walk(sink.stream(), id, *walk);
  sink.commit();
  return kExitOk;
}

int do_dist(const RunConfig& c, std::ostream& out) {
  const Configuration from = parse_configuration(c.from, "--from");
  const Configuration to = parse_configuration(c.to, "--to");
  Sink sink(c.out, out);
  sink.stream() << word_distance(from, to) << '\n';
  sink.commit();
  return kExitOk;
}

int do_ball(const RunConfig& c, std::ostream& out) {
  const Configuration center = c.center ? parse_configuration(c.center, "--center") : identity();
  const Ball ball = Ball::build(center, *c.radius, c.caps.members);
  Sink sink(c.out, out);
  sink.stream() << "r,sphere,ball\n";
  std::size_t total = 0;
  const auto spheres = ball.sphere_sizes();
  for (std::size_t r = 0; r < spheres.size(); ++r) {
    total += spheres[r];
    sink.stream() << r << ',' << spheres[r] << ',' << total << '\n';
  }
  sink.commit();
  return kExitOk;
}

int do_profile(const RunConfig& c, std::ostream& out) {
  Sink sink(c.out, out);
  if (!c.family.empty()) {
    sink.stream() << to_csv(circle_family_distortion(c.family, c.m_max, c.mode));
  } else {
    const PathSpec spec = path_of(c);
    // A circle is always profiled whole; its length stands in for the limit.
    const std::size_t limit =
        spec.kind == PathKind::C ? quasi_circle(spec.n).step_count() : *c.index_limit;
    sink.stream() << to_csv(distortion_profile(spec, limit, c.m_max, c.mode));
  }
  sink.commit();
  return kExitOk;
}

int do_separate(const RunConfig& c, std::ostream& out) {
  const PathSpec spec = path_of(c);
  Configuration first;
  Configuration second;
  if (c.first || c.second) {
    first = parse_configuration(c.first, "--first");
    second = parse_configuration(c.second, "--second");
  } else {
    const int pn = c.probe_n ? *c.probe_n : (spec.finite() ? spec.n : 0);
    const ProbeSet p = probes(pn);
    first = spec.finite() ? p.x_n : p.a_n;
    second = spec.finite() ? p.y_n : p.b_n;
  }
  SeparationReport report;
  try {
    report = separation_report(spec, c.thickening, *c.radius, first, second, c.caps.members);
  } catch (const InputError& e) {
    throw UsageError("--first/--second", e.what());
  }
  Sink sink(c.out, out);
  sink.stream() << to_json(report).dump(2) << '\n';
  sink.commit();
  return kExitOk;
}

std::set<int> parse_suite(const std::string& suite) {
  if (suite == "all") return {};
  std::set<int> ids;
  std::stringstream in(suite);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int id = std::stoi(item, &used);
      if (used != item.size() || id < 1 || id > kCriterionCount) throw std::invalid_argument(item);
      ids.insert(id);
    } catch (const std::exception&) {
      throw UsageError("--suite", "expected 'all' or criteria 1.." +
                                      std::to_string(kCriterionCount) + ", got '" + item + "'");
    }
  }
  if (ids.empty()) throw UsageError("--suite", "empty");
  return ids;
}

int do_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions options;
  options.criteria = parse_suite(c.suite);
  if (c.metric_fault) options.distance = faulty_word_distance;
  Sink sink(c.out, out);
  options.progress = &sink.stream();
  const auto results = run_acceptance(options);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  sink.stream() << (failed ? "FAIL" : "PASS") << ": " << results.size() - failed << "/"
                << results.size() << " criteria passed\n";
  sink.commit();
  return failed ? kExitVerificationFailed : kExitOk;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.caps.radius < 0) throw UsageError("--radius-cap", "must be non-negative");
  switch (c.command) {
    case Command::Walk:
      need_kind(c);
      if ((*c.kind == PathKind::N || *c.kind == PathKind::R) && !c.steps) {
        throw UsageError("--steps", "required for N and R");
      }
      if (*c.kind == PathKind::R && 2 * ray_length(c) > *c.steps) {
        throw UsageError("--n", "ray of length n needs 2n <= steps");
      }
      if (*c.kind == PathKind::C && c.steps) throw UsageError("--steps", "C is always whole");
      break;
    case Command::Dist:
      parse_configuration(c.from, "--from");
      parse_configuration(c.to, "--to");
      break;
    case Command::Ball:
      if (!c.radius) throw UsageError("--radius", "required");
      if (*c.radius < 0) throw UsageError("--radius", "must be non-negative");
      if (c.center) parse_configuration(c.center, "--center");
      if (*c.radius > c.caps.radius) {
        throw ResourceLimitError("radius " + std::to_string(*c.radius) + " exceeds --radius-cap " +
                                 std::to_string(c.caps.radius));
      }
      break;
    case Command::Profile:
      if (c.m_max < 0) throw UsageError("--m-max", "must be non-negative");
      if (!c.family.empty()) {
        if (c.kind && *c.kind != PathKind::C) throw UsageError("--family", "only for C");
        for (int n : c.family) {
          if (n < 1 || n > 6) throw UsageError("--family", "n must be in 1..6");
        }
        break;
      }
      need_kind(c);
      if (*c.kind != PathKind::C) {
        if (!c.index_limit) throw UsageError("--index-limit", "required");
        if (*c.index_limit < 2) throw UsageError("--index-limit", "must be at least 2");
        if (*c.index_limit > c.caps.index_limit) {
          throw ResourceLimitError("index limit " + std::to_string(*c.index_limit) +
                                   " exceeds --index-cap " + std::to_string(c.caps.index_limit));
        }
      }
      break;
    case Command::Separate:
      need_kind(c);
      if (!c.radius) throw UsageError("--radius", "required");
      if (*c.radius < 0) throw UsageError("--radius", "must be non-negative");
      if (c.thickening < 0) throw UsageError("--k", "must be non-negative");
      if (c.first || c.second) {
        parse_configuration(c.first, "--first");
        parse_configuration(c.second, "--second");
      } else if (!c.probe_n && !path_of(c).finite()) {
        throw UsageError("--probe-n", "required for N and R (or give --first/--second)");
      } else if (c.probe_n && *c.probe_n < 1) {
        throw UsageError("--probe-n", "must be at least 1");
      }
      if (*c.radius > c.caps.radius) {
        throw ResourceLimitError("radius " + std::to_string(*c.radius) + " exceeds --radius-cap " +
                                 std::to_string(c.caps.radius));
      }
      break;
    case Command::Verify:
      parse_suite(c.suite);
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::Walk: return do_walk(config, out, err);
      case Command::Dist: return do_dist(config, out);
      case Command::Ball: return do_ball(config, out);
      case Command::Profile: return do_profile(config, out);
      case Command::Separate: return do_separate(config, out);
      case Command::Verify: return do_verify(config, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lamplighter group paths: walks, distances, balls, distortion and separation."};
  app.require_subcommand(1);
  RunConfig c;

  auto add_kind = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--kind", [&c](const std::string& k) { c.kind = parse_path_kind(k); }, "Path: N, R, I or C")
        ->check(CLI::IsMember({"N", "R", "I", "C"}));
    sub->add_option("--n", c.n, "I_n/C_n parameter; negative ray length for R");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output file, '-' for stdout")->capture_default_str();
    sub->add_option("--member-cap", c.caps.members, "Ball member cap")->capture_default_str();
    sub->add_option("--radius-cap", c.caps.radius, "Ball radius cap")->capture_default_str();
  };

  auto* walk = app.add_subcommand("walk", "Write a path as a walk file");
  add_kind(walk);
  walk->add_option("--steps", c.steps, "Number of moves (N, R; optional cut for I)");
  walk->add_option("--cache-dir", c.cache_dir, "Walk cache (default $LL_COARSE_CACHE_DIR)");
  walk->add_flag("!--no-cache", c.use_cache, "Do not read or write the cache");
  add_common(walk);

  auto* dist = app.add_subcommand("dist", "Word distance between two configurations");
  dist->add_option("--from", c.from, "Configuration text form");
  dist->add_option("--to", c.to, "Configuration text form");
  add_common(dist);

  auto* ball = app.add_subcommand("ball", "Sphere sizes of a metric ball (CSV)");
  ball->add_option("--radius", c.radius, "Ball radius");
  ball->add_option("--center", c.center, "Center (default identity)");
  add_common(ball);

  auto* profile = app.add_subcommand("profile", "Distortion profile D(M) (CSV)");
  add_kind(profile);
  profile->add_option("--index-limit", c.index_limit, "Path indices used (N, R, I)");
  profile->add_option("--m-max", c.m_max, "Largest ambient distance M")->capture_default_str();
  profile
      ->add_option_function<std::string>(
          "--mode",
          [&c](const std::string& m) {
            c.mode = m == "pairwise" ? ProfileMode::Pairwise : ProfileMode::Neighborhood;
          },
          "Pair search (default neighborhood)")
      ->check(CLI::IsMember({"neighborhood", "pairwise"}));
  profile->add_option("--family", c.family, "C_n family, e.g. --family 1 2 3")->delimiter(',');
  profile->add_option("--index-cap", c.caps.index_limit, "Index limit cap")->capture_default_str();
  add_common(profile);

  auto* separate = app.add_subcommand("separate", "Ball-local separation report (JSON)");
  add_kind(separate);
  separate->add_option("--k", c.thickening, "Obstacle thickening K")->capture_default_str();
  separate->add_option("--radius", c.radius, "Ball radius R");
  separate->add_option("--probe-n", c.probe_n, "Use probes(n): a_n, b_n for N/R; x_n, y_n for I/C");
  separate->add_option("--first", c.first, "Explicit first probe");
  separate->add_option("--second", c.second, "Explicit second probe");
  add_common(separate);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--suite", c.suite, "'all' or a comma list of criteria")->capture_default_str();
  verify->add_flag("--inject-metric-fault", c.metric_fault)->group("");
  verify->add_option("--out", c.out, "Output file, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (walk->parsed()) c.command = Command::Walk;
  if (dist->parsed()) c.command = Command::Dist;
  if (ball->parsed()) c.command = Command::Ball;
  if (profile->parsed()) c.command = Command::Profile;
  if (separate->parsed()) c.command = Command::Separate;
  if (verify->parsed()) c.command = Command::Verify;
  return run(c, out, err);
}

}  // namespace lamplighter::cli
