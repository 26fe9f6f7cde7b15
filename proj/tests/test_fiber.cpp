#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramify/check.hpp"
#include "ramify/errors.hpp"
#include "support.hpp"

using namespace ramify;
using namespace ramify::testing;

namespace {

Partition L(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

Parametrization cubic_map() {
  auto st = make_ring({"s", "t"});
  return {st, {P("s^3", st), P("s^2*t", st), P("s*t^2", st), P("t^3", st)}};
}

Parametrization conic_map() {
  auto st = make_ring({"s", "t"});
  return {st, {P("s*t", st), P("s^2", st), P("t^2", st)}};
}

struct Case {
  Ideal ideal;
  ProjectivePoint center;
  Parametrization map;
};

std::vector<Case> cases() {
  return {{conic(), pt("(1:0:0)"), conic_map()},
          {twisted_cubic(), pt("(0:0:1:0)"), cubic_map()},
          {twisted_cubic(), pt("(1:0:0:1)"), cubic_map()},
          {twisted_cubic(), pt("(1:1:2:-3)"), cubic_map()}};
}

} // namespace

TEST(RestrictToLine, Examples) {
  auto R = ring_x(3);
  auto st = line_ring();
  auto f = P("x0^2 - x1*x2", R);
  EXPECT_EQ(restrict_to_line(f, pt("(0:1:1)"), pt("(1:0:0)")), P("t^2 - s^2", st));
  EXPECT_EQ(restrict_to_line(f, pt("(0:1:0)"), pt("(1:0:0)")), P("t^2", st));
  EXPECT_TRUE(restrict_to_line(P("(x1 - x2)*(x0 + x2)", R), pt("(0:1:1)"), pt("(1:0:0)")).is_zero());
  EXPECT_THROW(restrict_to_line(f, pt("(1:0:0)"), pt("(2:0:0)")), std::invalid_argument);
}

TEST(FiberForm, ConicExamples) {
  auto p = pt("(1:0:0)");
  auto a = fiber_form(conic(), pt("(0:1:1)"), p);
  ASSERT_TRUE(a.form);
  EXPECT_EQ(a.form->to_polynomial(line_ring()), P("s^2 - t^2", line_ring()));
  EXPECT_EQ(a.degree, 2u);
  EXPECT_EQ(*a.partition, L({1, 1}));
  auto b = fiber_form(conic(), pt("(0:1:0)"), p);
  EXPECT_EQ(b.degree, 2u);
  EXPECT_EQ(*b.partition, L({2}));
  auto c = fiber_form(conic(), pt("(0:0:1)"), p);
  EXPECT_EQ(*c.partition, L({2}));
}

TEST(FiberForm, EmptyFiberAndErrors) {
  auto p = pt("(0:0:1:0)");
  auto r = fiber_form(twisted_cubic(), pt("(0:1:0:0)"), p);
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(r.degree, 0u);
  EXPECT_FALSE(r.partition);
  EXPECT_THROW(fiber_form(twisted_cubic(), p, p), std::invalid_argument);
  EXPECT_THROW(fiber_form(Ideal(ring_x(4)), pt("(0:1:0:0)"), p), std::invalid_argument);
  auto R = ring_x(3);
  EXPECT_THROW(fiber_form(I({"x1"}, R), pt("(0:0:1)"), pt("(1:0:0)")), CenterOnScheme);
}

TEST(ClassifyPoint, ConicExamples) {
  auto p = pt("(1:0:0)");
  EXPECT_EQ(classify_point(conic(), pt("(0:1:0)"), p, L({2})), StratumMembership::InOpenStratum);
  EXPECT_EQ(classify_point(conic(), pt("(0:1:1)"), p, L({2})), StratumMembership::NotInStratum);
  EXPECT_EQ(classify_point(conic(), pt("(0:1:1)"), p, L({1, 1})), StratumMembership::InOpenStratum);
  EXPECT_EQ(classify_point(conic(), pt("(0:1:0)"), p, L({1, 1})), StratumMembership::InClosedStratumOnly);
  EXPECT_EQ(classify_point(conic(), pt("(0:1:0)"), p, L({1})), StratumMembership::InClosedStratumOnly);
  EXPECT_EQ(to_string(StratumMembership::InOpenStratum), "IN_OPEN_STRATUM");
}

TEST(FiberForm, DegreeMatchesHilbertFunctionOracle) {
  for (const auto& c : cases()) {
    auto points = sample_points(c.map, 30, 3);
    points.push_back(ProjectivePoint::unit(c.center.size(), 1));
    for (const auto& q : points) {
      if (q == c.center) continue;
      auto report = fiber_form(c.ideal, q, c.center);
      std::vector<Polynomial> restricted;
      for (const auto& g : c.ideal.generators()) restricted.push_back(restrict_to_line(g, q, c.center));
      const unsigned at10 = oracle::binary_quotient_length(restricted, 10);
      ASSERT_EQ(at10, oracle::binary_quotient_length(restricted, 11));
      ASSERT_EQ(report.degree, at10) << q.str();
    }
  }
}

TEST(FiberForm, IndependentOfGeneratorOrderAndScale) {
  std::mt19937_64 rng(1);
  for (const auto& c : cases()) {
    auto gens = c.ideal.generators();
    for (const auto& q : sample_points(c.map, 10, 8)) {
      auto reference = fiber_form(c.ideal, q, c.center);
      std::shuffle(gens.begin(), gens.end(), rng);
      std::vector<Polynomial> scaled;
      for (const auto& g : gens) scaled.push_back(g * Scalar(-3, 7));
      auto other = fiber_form(Ideal(c.ideal.ring(), scaled), q, c.center);
      ASSERT_EQ(other.form, reference.form);
      ASSERT_EQ(other.partition, reference.partition);
    }
  }
}

TEST(FiberForm, LevelsMatchPointwise) {
  for (const auto& c : cases()) {
    Projection proj(c.ideal, c.center);
    for (const auto& q : sample_points(c.map, 40, 21)) {
      auto report = fiber_form(c.ideal, q, c.center);
      ASSERT_GE(report.degree, 1u);
      auto on = [&](unsigned k) {
        for (const auto& g : proj.z_k_equations(k))
          if (!vanishes_at(g, q)) return false;
        return true;
      };
      ASSERT_TRUE(on(report.degree)) << q.str();
      ASSERT_FALSE(on(report.degree + 1)) << q.str();
    }
  }
}
