#include "lamplighter/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>

#include "lamplighter/ball.hpp"
#include "lamplighter/cli/run.hpp"
#include "lamplighter/codec.hpp"
#include "lamplighter/constructions.hpp"
#include "lamplighter/distortion.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/path_queries.hpp"
#include "lamplighter/separation.hpp"

namespace lamplighter::cli {

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    if (!passed) detail << "; ";
    passed = false;
    detail << why;
  }
};

std::string profile_text(const std::vector<std::int64_t>& gap) {
  std::string s;
  for (std::size_t m = 0; m < gap.size(); ++m) {
    if (m) s += ' ';
    s += std::to_string(gap[m]);
  }
  return s;
}

bool monotone(const std::vector<std::int64_t>& gap) {
  return std::is_sorted(gap.begin(), gap.end());
}

// 1. Closed form against breadth-first search on every member of B(e, 8).
Outcome metric_oracle(const DistanceFn& distance) {
  Outcome o;
  const Ball ball = Ball::build(identity(), 8);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Configuration v = ball.member(i);
    const auto bfs = bfs_distance(identity(), v, 8);
    const std::int64_t closed = distance(identity(), v);
    if (!bfs || *bfs != closed || ball.distance(i) != closed) ++mismatches;
  }
  o.detail << ball.size() << " members, " << mismatches << " mismatches";
  if (mismatches) o.passed = false;
  return o;
}

Configuration random_configuration(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<Position> cursor(-8, 8);
  std::vector<Position> lamps;
  for (Position p = -8; p <= 8; ++p) {
    if (coin(rng) == 0) lamps.push_back(p);
  }
  return Configuration::from_sorted(std::move(lamps), cursor(rng));
}

// 2. Group laws and left-invariance on random triples.
Outcome group_laws(const DistanceFn& distance) {
  Outcome o;
  std::mt19937_64 rng(20240611);
  constexpr int kTriples = 10'000;
  int failures = 0;
  for (int t = 0; t < kTriples; ++t) {
    const Configuration a = random_configuration(rng);
    const Configuration b = random_configuration(rng);
    const Configuration c = random_configuration(rng);
    bool ok = compose(compose(a, b), c) == compose(a, compose(b, c));
    ok = ok && compose(identity(), a) == a && compose(a, identity()) == a;
    ok = ok && compose(a, invert(a)) == identity() && compose(invert(a), a) == identity();
    ok = ok && distance(compose(c, a), compose(c, b)) == distance(a, b);
    ok = ok && distance(a, b) == word_length(compose(invert(a), b));
    if (!ok) ++failures;
  }
  o.detail << kTriples << " triples, " << failures << " failures";
  if (failures) o.passed = false;
  return o;
}

// 3. N: distinct vertices; milestones c_n match stage_config and dyadic view.
Outcome n_well_formed() {
  Outcome o;
  constexpr std::size_t kSteps = 100'000;
  constexpr std::uint64_t kLast = 4096;
  const Walk n = half_quasi_line(kSteps);
  if (!n.is_simple()) o.fail("half_quasi_line(1e5) repeats a vertex");
  std::size_t previous = 0;
  for (std::uint64_t k = 0; k <= kLast && o.passed; ++k) {
    const auto at = n.milestone("c" + std::to_string(k));
    if (!at) {
      o.fail("milestone c" + std::to_string(k) + " missing");
      break;
    }
    const Configuration& v = n.vertices()[*at];
    const DyadicViews views = dyadic_views(v);
    if (!(v == stage_config(k)) || views.plus != k || views.minus != 0) {
      o.fail("c" + std::to_string(k) + " is not the dyadic stage configuration");
    }
    if (k > 0 && *at <= previous) o.fail("milestones out of order at c" + std::to_string(k));
    previous = *at;
  }
  if (o.passed) o.detail << "1e5 steps simple, c0..c" << kLast << " checked, c" << kLast << " at " << previous;
  return o;
}

// 4. Stage depth lemma and the truncation it justifies.
Outcome depth_lemma() {
  Outcome o;
  constexpr std::uint64_t kLast = 4096;
  for (std::uint64_t n = 1; n <= kLast; ++n) {
    const Walk w = stage_walk(n);
    std::int64_t least = word_length(w.vertices().front());
    for (const auto& v : w.vertices()) least = std::min(least, word_length(v));
    const std::int64_t floor_log = std::bit_width(n) - 1;
    if (least < floor_log) {
      o.fail("stage " + std::to_string(n) + " reaches length " + std::to_string(least));
      break;
    }
  }
  for (int r = 0; r <= 8; ++r) {
    const Ball ball = Ball::build(identity(), r);
    const auto tight = path_in_ball(PathSpec::half_line(), ball, std::uint64_t{1} << (r + 1));
    const auto loose = path_in_ball(PathSpec::half_line(), ball, std::uint64_t{1} << (r + 2));
    if (tight != loose) o.fail("truncation differs at r = " + std::to_string(r));
  }
  if (o.passed) o.detail << "stages 1.." << kLast << " respect floor(log2 n); truncation stable for r <= 8";
  return o;
}

// 5. D(M) for N is monotone and the same at index limits 2000 and 4000; the
// neighbourhood profile equals the pairwise one at 4000.
Outcome n_distortion() {
  Outcome o;
  const auto short_run = distortion_profile(PathSpec::half_line(), 2000, 4);
  const auto long_run = distortion_profile(PathSpec::half_line(), 4000, 4);
  const auto pairwise = distortion_profile(PathSpec::half_line(), 4000, 4, ProfileMode::Pairwise);
  if (!monotone(long_run.gap)) o.fail("profile not monotone");
  if (short_run.gap != long_run.gap) o.fail("profile differs between 2000 and 4000");
  if (pairwise.gap != long_run.gap) o.fail("neighbourhood and pairwise modes disagree");
  o.detail << (o.passed ? "" : "; ") << "D(0..4) = " << profile_text(long_run.gap);
  return o;
}

// 6. Separation by N.
Outcome n_separation() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const ProbeSet p = probes(n);
    const auto da = distance_to_path(p.a_n, PathSpec::half_line(), n);
    const auto db = distance_to_path(p.b_n, PathSpec::half_line(), n);
    if ((da && *da < n) || (db && *db < n)) o.fail("probe within n of N at n = " + std::to_string(n));
    int radius = 5 * n + 2;
    std::optional<SeparationReport> report;
    try {
      report = separation_report(PathSpec::half_line(), 0, radius, p.a_n, p.b_n);
    } catch (const ResourceLimitError&) {
      if (n != 4) throw;
      radius = 5 * n;
      report = separation_report(PathSpec::half_line(), 0, radius, p.a_n, p.b_n);
    }
    const bool distinct = report->probes[0].component && report->probes[1].component &&
                          *report->probes[0].component != *report->probes[1].component;
    if (!report->separated || !distinct) o.fail("not separated at n = " + std::to_string(n));
    o.detail << (n > 2 ? ", " : "") << "n=" << n << " R=" << radius << " ball " << report->ball_size
             << " " << report->verdict();
  }
  return o;
}

// 7. The quasi-line R.
Outcome r_checks() {
  Outcome o;
  if (!profile_window(PathSpec::line(), 4000).is_simple()) o.fail("R window not simple");
  const auto short_run = distortion_profile(PathSpec::line(), 2000, 4);
  const auto long_run = distortion_profile(PathSpec::line(), 4000, 4);
  if (!monotone(long_run.gap)) o.fail("R profile not monotone");
  if (short_run.gap != long_run.gap) o.fail("R profile differs between 2000 and 4000");
  const ProbeSet p = probes(2);
  const auto report = separation_report(PathSpec::line(), 0, 12, p.a_n, p.b_n);
  if (!report.separated) o.fail("R does not separate a_2, b_2 in B(e, 12)");
  o.detail << (o.passed ? "" : "; ") << "D(0..4) = " << profile_text(long_run.gap) << ", "
           << report.verdict();
  return o;
}

// 8. Quasi-intervals and quasi-circles for n = 1..3.
Outcome interval_circle() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    const QuasiIntervalParts parts = quasi_interval_parts(n);
    if (parts.mirrored != mirror_walk(parts.first)) o.fail("I_n3 is not the mirror of I_n1" + tag);
    const Walk interval = quasi_interval(n);
    if (!interval.is_simple()) o.fail("I_n not simple" + tag);
    std::vector<Position> full;
    for (Position p = 0; p <= 2 * n; ++p) full.push_back(p);
    if (!(interval.end() == Configuration(full, 2 * n))) o.fail("I_n ends elsewhere" + tag);
    const Walk circle = quasi_circle(n);
    if (!circle.closed() || !circle.is_simple()) o.fail("C_n not a simple closed walk" + tag);

    const ProbeSet p = probes(n);
    const auto dx = distance_to_path(p.x_n, PathSpec::interval(n), n);
    const auto dy = distance_to_path(p.y_n, PathSpec::interval(n), n);
    if ((dx && *dx < n) || (dy && *dy < n)) o.fail("probe within n of I_n" + tag);
    for (const PathSpec& spec : {PathSpec::interval(n), PathSpec::circle(n)}) {
      const auto report = separation_report(spec, 0, 5 * n + 4, p.x_n, p.y_n);
      if (!report.separated) o.fail(spec.label() + " does not separate x_n, y_n" + tag);
    }
  }
  if (o.passed) o.detail << "I_n, C_n simple and separating for n = 1..3 at R = 5n+4";
  return o;
}

// 9. The envelope of the C_n profiles stops changing after n = 3.
Outcome circle_family() {
  Outcome o;
  const std::vector<int> all = {1, 2, 3, 4, 5};
  const auto wide = circle_family_distortion(all, 4);
  const auto narrow = circle_family_distortion(std::span(all).first(3), 4);
  if (!monotone(wide.envelope)) o.fail("envelope not monotone");
  if (wide.envelope != narrow.envelope) {
    o.fail("envelope grows from {1..3} to {1..5}: " + profile_text(narrow.envelope) + " -> " +
           profile_text(wide.envelope));
  }
  o.detail << (o.passed ? "" : "; ") << "h_emp(0..4) = " << profile_text(wide.envelope);
  return o;
}

fs::path scratch_dir() {
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("ll-coarse-verify-" + std::to_string(rd()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 10. Codec round-trip on B(e, 6) and byte-identical repeated profile runs.
Outcome determinism() {
  Outcome o;
  const Ball ball = Ball::build(identity(), 6);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Configuration v = ball.member(i);
    const std::string text = encode(v);
    if (!(decode(text) == v) || encode(decode(text)) != text) ++bad;
  }
  if (bad) o.fail(std::to_string(bad) + " codec round-trip failures");

  const fs::path dir = scratch_dir();
  std::ostringstream sink;
  std::string outputs[2];
  for (int k = 0; k < 2; ++k) {
    RunConfig config;
    config.command = Command::Profile;
    config.kind = PathKind::N;
    config.index_limit = 2000;
    config.m_max = 4;
    config.out = (dir / ("profile" + std::to_string(k) + ".csv")).string();
    config.use_cache = false;
    if (run(config, sink, sink) != kExitOk) o.fail("profile run failed");
    outputs[k] = slurp(config.out);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (outputs[0].empty() || outputs[0] != outputs[1]) o.fail("profile outputs differ");
  if (o.passed) o.detail << ball.size() << " configurations round-trip; two profile runs byte-identical";
  return o;
}

}  // namespace

std::int64_t faulty_word_distance(const Configuration& g, const Configuration& h) {
  std::vector<Position> diff;
  std::set_symmetric_difference(g.lamps().begin(), g.lamps().end(), h.lamps().begin(),
                                h.lamps().end(), std::back_inserter(diff));
  Position lo = std::min(g.cursor(), h.cursor());
  Position hi = std::max(g.cursor(), h.cursor());
  if (!diff.empty()) {
    lo = std::min(lo, diff.front());
    hi = std::max(hi, diff.back());
  }
  return static_cast<std::int64_t>(diff.size()) + (g.cursor() - lo) + (hi - lo) + (hi - h.cursor());
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  const DistanceFn distance =
      options.distance ? options.distance
                       : DistanceFn([](const Configuration& a, const Configuration& b) {
                           return word_distance(a, b);
                         });
  struct Entry {
    const char* title;
    std::function<Outcome()> check;
  };
  const Entry entries[kCriterionCount] = {
      {"metric oracle on B(e,8)", [&] { return metric_oracle(distance); }},
      {"group laws", [&] { return group_laws(distance); }},
      {"N well-formedness", n_well_formed},
      {"stage depth lemma", depth_lemma},
      {"N distortion stabilisation", n_distortion},
      {"separation by N", n_separation},
      {"quasi-line R", r_checks},
      {"quasi-intervals and quasi-circles", interval_circle},
      {"quasi-circle family uniformity", circle_family},
      {"codec and CLI determinism", determinism},
  };

  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.criteria.empty() && !options.criteria.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.title = entries[id - 1].title;
    try {
      Outcome o = entries[id - 1].check();
      r.passed = o.passed;
      r.detail = o.detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.progress) *options.progress << format_result(r) << '\n' << std::flush;
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& result) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2f", result.seconds);
  return "criterion " + std::to_string(result.id) + (result.passed ? " PASS  " : " FAIL  ") +
         result.title + ": " + result.detail + " (" + seconds + " s)";
}

}  // namespace lamplighter::cli
