#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <unordered_set>

#include "lamplighter/constructions.hpp"
#include "lamplighter/errors.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/walk.hpp"

namespace ll = lamplighter;
using ll::Configuration;
using ll::Step;

namespace {

std::int64_t floor_log2(std::uint64_t n) { return 63 - std::countl_zero(n); }

ll::Walk replay(const Configuration& start, const std::vector<Step>& steps) { return {start, steps}; }

}  // namespace

TEST(Walk, VerticesFollowSteps) {
  const ll::Walk w({}, {Step::Toggle, Step::Right, Step::Toggle, Step::Left});
  ASSERT_EQ(w.vertices().size(), 5U);
  EXPECT_EQ(w.end(), Configuration({0, 1}, 0));
  EXPECT_TRUE(w.is_simple());
  EXPECT_FALSE(w.closed());
  EXPECT_FALSE(ll::Walk({}, {Step::Right, Step::Right, Step::Left}).is_simple());
  EXPECT_TRUE(ll::Walk({}, {Step::Right, Step::Left}).closed());
  EXPECT_TRUE(ll::Walk({}, {Step::Toggle, Step::Right, Step::Toggle, Step::Left, Step::Toggle,
                            Step::Right, Step::Toggle, Step::Left})
                  .closed());
}

TEST(Walk, PrefixDropsLaterMilestones) {
  ll::Walk w({}, {Step::Toggle, Step::Right, Step::Toggle});
  w.add_milestone("start", 0);
  w.add_milestone("end", 3);
  const ll::Walk p = w.prefix(2);
  EXPECT_EQ(p.step_count(), 2U);
  EXPECT_EQ(p.milestone("start"), 0U);
  EXPECT_EQ(p.milestone("end"), std::nullopt);
}

TEST(Walk, StepBetween) {
  EXPECT_EQ(ll::step_between({}, Configuration({0}, 0)), Step::Toggle);
  EXPECT_EQ(ll::step_between({}, Configuration({}, 1)), Step::Right);
  EXPECT_EQ(ll::step_between({}, Configuration({}, -1)), Step::Left);
  EXPECT_EQ(ll::step_between({}, Configuration({1}, 0)), std::nullopt);
  EXPECT_EQ(ll::step_between({}, {}), std::nullopt);
}

TEST(MirrorWalk, Examples) {
  EXPECT_EQ(ll::mirror_walk(std::vector{Step::Toggle}), std::vector{Step::Toggle});
  EXPECT_EQ(ll::mirror_walk(std::vector{Step::Right, Step::Toggle, Step::Left}),
            (std::vector{Step::Left, Step::Toggle, Step::Right}));
}

TEST(MirrorWalk, IsInvolution) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Step> s(static_cast<std::size_t>(trial));
    for (auto& step : s) step = ll::kAllSteps[pick(rng)];
    EXPECT_EQ(ll::mirror_walk(ll::mirror_walk(s)), s);
  }
}

TEST(CancelBacktracks, ReducesFreely) {
  EXPECT_EQ(ll::cancel_backtracks(std::vector{Step::Right, Step::Toggle, Step::Toggle, Step::Left}),
            std::vector<Step>{});
  EXPECT_EQ(ll::cancel_backtracks(std::vector{Step::Right, Step::Toggle, Step::Right}),
            (std::vector{Step::Right, Step::Toggle, Step::Right}));
}

TEST(TrailingOnes, Examples) {
  EXPECT_EQ(ll::trailing_ones(0), 0U);
  EXPECT_EQ(ll::trailing_ones(3), 2U);
  EXPECT_EQ(ll::trailing_ones(6), 0U);
  EXPECT_EQ(ll::trailing_ones(0b1011), 2U);
}

TEST(StageConfig, Examples) {
  EXPECT_EQ(ll::stage_config(0), Configuration());
  EXPECT_EQ(ll::stage_config(1), Configuration({0}, 0));
  EXPECT_EQ(ll::stage_config(6), Configuration({1, 2}, 0));
}

TEST(StageWalk, Examples) {
  const ll::Walk s0 = ll::stage_walk(0);
  EXPECT_EQ(s0.steps(), std::vector{Step::Toggle});
  EXPECT_EQ(s0.end(), Configuration({0}, 0));

  const ll::Walk s1 = ll::stage_walk(1);
  EXPECT_EQ(s1.step_count(), 10U);
  const std::vector<Configuration> expected{
      {{0}, 0},       {{0}, -1},      {{-1, 0}, -1}, {{-1, 0}, 0}, {{-1}, 0}, {{-1}, 1},
      {{-1, 1}, 1},   {{-1, 1}, 0},   {{-1, 1}, -1}, {{1}, -1},    {{1}, 0}};
  EXPECT_EQ(s1.vertices(), expected);

  EXPECT_EQ(ll::stage_walk(3).end(), Configuration({2}, 0));
  EXPECT_EQ(ll::dyadic_views(ll::stage_walk(3).end()), (ll::DyadicViews{4, 0}));
}

TEST(StageWalk, InvariantsUpTo4096) {
  for (std::uint64_t n = 0; n <= 4096; ++n) {
    const ll::Walk w = ll::stage_walk(n);
    const auto k = static_cast<ll::Position>(ll::trailing_ones(n));
    ASSERT_EQ(w.start(), ll::stage_config(n));
    ASSERT_EQ(w.end(), ll::stage_config(n + 1));
    ASSERT_TRUE(w.is_simple()) << n;
    ASSERT_LE(w.step_count(), static_cast<std::size_t>(9 * k + 3));
    const Configuration base = ll::stage_config(n);
    for (const Configuration& v : w.vertices()) {
      ASSERT_GE(v.cursor(), -k);
      ASSERT_LE(v.cursor(), k);
      // lamps outside [-k, k] are the untouched high bits of n
      for (ll::Position p : v.lamps()) {
        if (p < -k || p > k) ASSERT_TRUE(base.is_lit(p)) << n;
      }
      for (ll::Position p : base.lamps()) {
        if (p > k) ASSERT_TRUE(v.is_lit(p)) << n;
      }
    }
  }
}

TEST(StageWalk, DepthLemmaUpTo4096) {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const ll::Walk w = ll::stage_walk(n);
    std::int64_t least = std::numeric_limits<std::int64_t>::max();
    for (const Configuration& v : w.vertices()) least = std::min(least, ll::word_length(v));
    ASSERT_GE(least, floor_log2(n)) << n;
  }
}

TEST(HalfQuasiLine, Examples) {
  const ll::Walk one = ll::half_quasi_line(1);
  EXPECT_EQ(one.vertices(), (std::vector<Configuration>{{}, {{0}, 0}}));

  const ll::Walk w = ll::half_quasi_line(11);
  EXPECT_EQ(w.milestone("c0"), 0U);
  EXPECT_EQ(w.milestone("c1"), 1U);
  EXPECT_EQ(w.milestone("c2"), 11U);

  const ll::Walk longer = ll::half_quasi_line(200);
  const auto c5 = longer.milestone("c5");
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(ll::dyadic_views(longer.vertices()[*c5]).plus, 5U);
}

TEST(HalfQuasiLine, HundredThousandStepsAreSimple) {
  const ll::Walk w = ll::half_quasi_line(100000);
  EXPECT_EQ(w.step_count(), 100000U);
  EXPECT_TRUE(w.is_simple());
  std::size_t previous = 0;
  for (std::uint64_t n = 0; n <= 4096; ++n) {
    const auto at = w.milestone("c" + std::to_string(n));
    ASSERT_TRUE(at.has_value()) << n;
    ASSERT_EQ(w.vertices()[*at], ll::stage_config(n));
    if (n > 0) ASSERT_GT(*at, previous);
    previous = *at;
  }
}

TEST(QuasiLine, RayVertices) {
  EXPECT_EQ(ll::ray_vertex(0), Configuration());
  EXPECT_EQ(ll::ray_vertex(1), Configuration({-1}, -1));
  EXPECT_EQ(ll::ray_vertex(3), Configuration({-3, -2, -1}, -3));
}

TEST(QuasiLine, SimpleAndRayOffN) {
  const ll::Walk r = ll::quasi_line(50, 4000);
  EXPECT_TRUE(r.is_simple());
  EXPECT_EQ(r.start(), ll::ray_vertex(50));
  for (std::size_t i = 1; i <= 50; ++i) {
    const auto at = r.milestone("R-" + std::to_string(i));
    ASSERT_TRUE(at.has_value());
    EXPECT_EQ(r.vertices()[*at], ll::ray_vertex(i));
  }
  EXPECT_EQ(r.vertices()[*r.milestone("c0")], ll::identity());

  const ll::Walk n = ll::half_quasi_line(4000);
  const std::unordered_set<Configuration, ll::ConfigurationHash> on_n(n.vertices().begin(),
                                                                      n.vertices().end());
  for (std::size_t i = 1; i <= 50; ++i) EXPECT_FALSE(on_n.contains(ll::ray_vertex(i)));
}

TEST(QuasiInterval, Examples) {
  const ll::QuasiIntervalParts parts = ll::quasi_interval_parts(1);
  const ll::Walk first = replay({}, parts.first);
  EXPECT_EQ(first.end(), ll::stage_config(7));
  EXPECT_EQ(replay(first.end(), parts.bridge).end(), Configuration({}, 2));

  // The reduced walk skips the two junction tips; its milestones sit one move away.
  const ll::Walk i1 = ll::quasi_interval(1);
  EXPECT_EQ(ll::word_distance(i1.vertices()[*i1.milestone("I1_end")], ll::stage_config(7)), 1);
  EXPECT_EQ(ll::word_distance(i1.vertices()[*i1.milestone("I2_end")], Configuration({}, 2)), 1);
  EXPECT_EQ(ll::quasi_interval(2).end(), Configuration({0, 1, 2, 3, 4}, 4));
  EXPECT_THROW(ll::quasi_interval(0), std::invalid_argument);
  EXPECT_THROW(ll::quasi_interval(ll::kMaxQuasiN + 1), ll::ResourceLimitError);
}

TEST(QuasiInterval, PartsAndReduction) {
  for (int n = 1; n <= 3; ++n) {
    const ll::QuasiIntervalParts parts = ll::quasi_interval_parts(n);
    EXPECT_EQ(parts.mirrored, ll::mirror_walk(parts.first));
    const ll::Walk first = replay({}, parts.first);
    EXPECT_EQ(first.end(), ll::stage_config((std::uint64_t{1} << (2 * n + 1)) - 1));
    const ll::Walk bridge = replay(first.end(), parts.bridge);
    EXPECT_EQ(bridge.end(), Configuration({}, 2 * n));
    const ll::Walk third = replay(bridge.end(), parts.mirrored);

    std::vector<Step> all = parts.first;
    all.insert(all.end(), parts.bridge.begin(), parts.bridge.end());
    all.insert(all.end(), parts.mirrored.begin(), parts.mirrored.end());
    const ll::Walk literal({}, all);
    EXPECT_FALSE(literal.is_simple()) << "the plain concatenation backtracks at both junctions";

    const ll::Walk reduced = ll::quasi_interval(n);
    EXPECT_EQ(reduced.steps(), ll::cancel_backtracks(all));
    EXPECT_EQ(reduced.step_count() + 4, literal.step_count());
    EXPECT_TRUE(reduced.is_simple()) << n;
    EXPECT_EQ(reduced.end(), third.end());

    std::vector<ll::Position> run;
    for (ll::Position p = 0; p <= 2 * n; ++p) run.push_back(p);
    EXPECT_EQ(reduced.end(), Configuration(run, 2 * n));
  }
}

TEST(QuasiInterval, OuterSegmentsStayApart) {
  for (int n = 1; n <= 2; ++n) {
    const ll::QuasiIntervalParts parts = ll::quasi_interval_parts(n);
    const ll::Walk first = replay({}, parts.first);
    const ll::Walk bridge = replay(first.end(), parts.bridge);
    const ll::Walk third = replay(bridge.end(), parts.mirrored);
    std::int64_t closest = std::numeric_limits<std::int64_t>::max();
    for (const auto& u : first.vertices()) {
      for (const auto& v : third.vertices()) closest = std::min(closest, ll::word_distance(u, v));
    }
    EXPECT_GT(closest, n);
  }
}

TEST(QuasiCircle, ClosedSimpleAndContainsInterval) {
  for (int n = 1; n <= 4; ++n) {
    const ll::Walk c = ll::quasi_circle(n);
    const ll::Walk i = ll::quasi_interval(n);
    EXPECT_TRUE(c.closed()) << n;
    EXPECT_EQ(c.start(), ll::identity());
    EXPECT_TRUE(c.is_simple()) << n;
    ASSERT_GT(c.step_count(), i.step_count());
    EXPECT_TRUE(std::equal(i.steps().begin(), i.steps().end(), c.steps().begin()));
    EXPECT_EQ(c.milestone("I3_end"), i.step_count());
  }
}

TEST(QuasiCircle, ClosingAvoidsProbes) {
  for (int n = 1; n <= 3; ++n) {
    const ll::Walk c = ll::quasi_circle(n);
    const ll::ProbeSet p = ll::probes(n);
    for (const auto& v : c.vertices()) {
      EXPECT_NE(v, p.x_n);
      EXPECT_NE(v, p.y_n);
    }
  }
}

TEST(Probes, Examples) {
  const ll::ProbeSet p = ll::probes(2);
  EXPECT_EQ(p.a_n, Configuration({0, 1, 2, 3}, 2));
  EXPECT_EQ(p.b_n, Configuration({}, -2));
  EXPECT_EQ(p.x_n, Configuration({0, 1, 2, 3, 4}, 2));
  EXPECT_EQ(p.y_n, p.b_n);
  EXPECT_THROW(ll::probes(0), std::invalid_argument);
}
