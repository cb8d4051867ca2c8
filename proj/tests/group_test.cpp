#include <gtest/gtest.h>

#include <random>

#include "lamplighter/ball.hpp"
#include "lamplighter/codec.hpp"
#include "lamplighter/configuration.hpp"
#include "lamplighter/constructions.hpp"
#include "lamplighter/errors.hpp"
#include "lamplighter/metric.hpp"

namespace ll = lamplighter;
using ll::Configuration;
using ll::Step;

namespace {

Configuration random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pos(-6, 6);
  std::bernoulli_distribution lit(0.3);
  std::vector<ll::Position> lamps;
  for (ll::Position p = -6; p <= 6; ++p) {
    if (lit(rng)) lamps.push_back(p);
  }
  return {lamps, pos(rng)};
}

}  // namespace

TEST(ApplyStep, Examples) {
  EXPECT_EQ(ll::apply_step({}, Step::Toggle), Configuration({0}, 0));
  EXPECT_EQ(ll::apply_step(Configuration({0}, 0), Step::Toggle), Configuration());
  EXPECT_EQ(ll::apply_step({}, Step::Right), Configuration({}, 1));
  EXPECT_EQ(ll::apply_step({}, Step::Left), Configuration({}, -1));
}

TEST(ApplyStep, MovesUndoAndToggleIsInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Configuration c = random_config(rng);
    EXPECT_EQ(ll::apply_step(ll::apply_step(c, Step::Right), Step::Left), c);
    EXPECT_EQ(ll::apply_step(ll::apply_step(c, Step::Toggle), Step::Toggle), c);
    for (Step s : ll::kAllSteps) {
      EXPECT_EQ(ll::apply_step(c, s), ll::compose(c, ll::generator_element(s)));
    }
  }
}

TEST(Configuration, RejectsDuplicatesAndSorts) {
  EXPECT_THROW(Configuration({1, 1}, 0), std::invalid_argument);
  EXPECT_EQ(Configuration({2, -2, 1}, 0).lamps(), (std::vector<ll::Position>{-2, 1, 2}));
  EXPECT_TRUE(Configuration({3}, 0).is_lit(3));
  EXPECT_FALSE(Configuration({3}, 0).is_lit(2));
}

TEST(Compose, Examples) {
  const Configuration x({-1, 4}, 2);
  EXPECT_EQ(ll::compose(x, {}), x);
  EXPECT_EQ(ll::compose({}, x), x);
  EXPECT_EQ(ll::compose(Configuration({}, 1), Configuration({0}, 0)), Configuration({1}, 1));
  EXPECT_EQ(ll::compose(Configuration({0}, 0), Configuration({0}, 0)), Configuration());
}

TEST(Invert, Examples) {
  EXPECT_EQ(ll::invert({}), Configuration());
  EXPECT_EQ(ll::invert(Configuration({}, 3)), Configuration({}, -3));
  EXPECT_EQ(ll::invert(Configuration({1}, 1)), Configuration({0}, -1));
}

TEST(GroupLaws, RandomTriples) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const Configuration f = random_config(rng);
    const Configuration g = random_config(rng);
    const Configuration h = random_config(rng);
    ASSERT_EQ(ll::compose(ll::compose(f, g), h), ll::compose(f, ll::compose(g, h)));
    ASSERT_EQ(ll::compose(g, ll::invert(g)), ll::identity());
    ASSERT_EQ(ll::compose(ll::invert(g), g), ll::identity());
    ASSERT_EQ(ll::word_distance(ll::compose(f, g), ll::compose(f, h)), ll::word_distance(g, h));
  }
}

TEST(DyadicViews, Examples) {
  EXPECT_EQ(ll::dyadic_views(Configuration({-2, 1, 2}, 0)), (ll::DyadicViews{6, 2}));
  EXPECT_EQ(ll::dyadic_views(Configuration({-2, 1, 2}, -9)), (ll::DyadicViews{6, 2}));
  EXPECT_EQ(ll::dyadic_views(Configuration({}, 5)), (ll::DyadicViews{0, 0}));
  EXPECT_EQ(ll::dyadic_views(Configuration({0}, 0)), (ll::DyadicViews{1, 0}));
  EXPECT_THROW(ll::dyadic_views(Configuration({64}, 0)), std::overflow_error);
}

TEST(DyadicViews, InvertsBinaryExpansion) {
  for (std::uint64_t n = 0; n < (1U << 16); ++n) {
    ASSERT_EQ(ll::dyadic_views(ll::stage_config(n)), (ll::DyadicViews{n, 0})) << n;
  }
}

TEST(WordDistance, Examples) {
  EXPECT_EQ(ll::word_distance({}, Configuration({0}, 0)), 1);
  EXPECT_EQ(ll::word_distance({}, Configuration({1}, 0)), 3);
  EXPECT_EQ(ll::word_distance({}, Configuration({0, 1, 2, 3}, 2)), 8);
  EXPECT_EQ(ll::word_distance(Configuration({0, 1, 2, 3}, 2), {}), 8);
}

TEST(WordDistance, MetricAxioms) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5000; ++i) {
    const Configuration f = random_config(rng);
    const Configuration g = random_config(rng);
    const Configuration h = random_config(rng);
    ASSERT_EQ(ll::word_distance(g, h), ll::word_distance(h, g));
    ASSERT_LE(ll::word_distance(f, h), ll::word_distance(f, g) + ll::word_distance(g, h));
    ASSERT_EQ(ll::word_distance(g, h) == 0, g == h);
  }
}

TEST(WordDistance, PackedFormAgrees) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Configuration g = random_config(rng);
    const Configuration h = random_config(rng);
    ASSERT_EQ(ll::word_distance(*ll::PackedConfig::pack(g), *ll::PackedConfig::pack(h)),
              ll::word_distance(g, h));
  }
}

TEST(BfsDistance, Examples) {
  EXPECT_EQ(ll::bfs_distance({}, {}, 0), 0);
  EXPECT_EQ(ll::bfs_distance({}, Configuration({1}, 0), 5), 3);
  EXPECT_EQ(ll::bfs_distance({}, Configuration({}, 100), 5), std::nullopt);
}

TEST(BfsDistance, AgreesWithClosedFormOnBallOfRadius8) {
  const ll::Ball ball = ll::Ball::build({}, 8);
  EXPECT_EQ(ball.size(), 490U);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Configuration v = ball.member(i);
    const auto bfs = ll::bfs_distance({}, v, 8);
    ASSERT_TRUE(bfs.has_value());
    ASSERT_EQ(*bfs, ll::word_length(v));
    ASSERT_EQ(ball.distance(i), *bfs);
  }
}

TEST(Codec, Examples) {
  EXPECT_EQ(ll::encode({}), R"({"cursor":0,"lamps":[]})");
  EXPECT_EQ(ll::encode(Configuration({2, -2, 1}, 0)), R"({"cursor":0,"lamps":[-2,1,2]})");
  EXPECT_EQ(ll::decode(R"({"cursor":0,"lamps":[-2,1,2]})"), Configuration({-2, 1, 2}, 0));
  EXPECT_EQ(ll::decode(R"( { "lamps" : [ 3 ], "cursor" : -4 } )"), Configuration({3}, -4));
}

TEST(Codec, RejectsBadInput) {
  for (const char* bad : {R"({"cursor":0,"lamps":[1,1]})", R"({"cursor":0,"lamps":[2,1]})",
                          R"({"cursor":0,"lamps":[1.5]})", R"({"cursor":"0","lamps":[]})",
                          R"({"cursor":0})", R"({"cursor":0,"lamps":[],"x":1})", R"([0,[]])",
                          R"({"cursor":0,"lamps":[)", ""}) {
    EXPECT_THROW(ll::decode(bad), ll::InputError) << bad;
  }
}

TEST(Codec, ReportsPositionOfBadLamp) {
  try {
    ll::decode(R"({"cursor":0,"lamps":[0,4,4]})");
    FAIL() << "expected InputError";
  } catch (const ll::InputError& e) {
    EXPECT_EQ(e.position(), 2U);
  }
}

TEST(Codec, RoundTripsBallOfRadius6) {
  const ll::Ball ball = ll::Ball::build({}, 6);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Configuration v = ball.member(i);
    ASSERT_EQ(ll::decode(ll::encode(v)), v);
  }
}
