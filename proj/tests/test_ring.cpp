#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramify/point.hpp"
#include "support.hpp"

using namespace ramify;
using namespace ramify::testing;

TEST(Polynomial, AdditionCancelsAndMerges) {
  auto R = ring_x(3);
  EXPECT_TRUE((P("x0", R) + P("-x0", R)).is_zero());
  EXPECT_EQ(P("x0*x2 - x1^2", R) + P("x1^2", R), P("x0*x2", R));
  EXPECT_EQ(P("x0 + x1", R) + P("x0 + x2", R), P("2*x0 + x1 + x2", R));
}

TEST(Polynomial, Multiplication) {
  auto R = ring_x(3);
  EXPECT_EQ(P("x0 - x1", R) * P("x0 + x1", R), P("x0^2 - x1^2", R));
  auto f = P("3/2*x0*x1 - x2^3 + 7", R);
  EXPECT_EQ(f * Polynomial::constant(R, 1), f);
  auto st = make_ring({"s", "t"});
  EXPECT_EQ(P("s - t", st) * P("s + t", st) * P("s", st), P("s^3 - s*t^2", st));
}

TEST(Polynomial, RingMismatchThrows) {
  auto a = ring_x(2);
  auto b = make_ring({"y0", "y1"});
  EXPECT_THROW(P("x0", a) + P("y0", b), std::invalid_argument);
}

TEST(Polynomial, DegreeInVariable) {
  auto R = ring_x(4);
  EXPECT_EQ(deg_in(P("x0^2 - x1*x2", R), "x0"), 2);
  EXPECT_EQ(deg_in(P("x1*x3 - x2^2", R), "x0"), 0);
  EXPECT_EQ(deg_in(Polynomial(R), "x0"), kNegInfinity);
  EXPECT_THROW(deg_in(P("x1", R), "y"), std::invalid_argument);
}

TEST(Polynomial, LeadingCoefficientInVariable) {
  auto R = ring_x(4);
  EXPECT_EQ(leading_coefficient_in(P("x0*x2 - x1^2", R), 0), P("x2", R));
  EXPECT_EQ(leading_coefficient_in(P("x0^2 - x1*x2", R), 0), P("1", R));
  EXPECT_EQ(leading_coefficient_in(P("x1*x3 - x2^2", R), 0), P("x1*x3 - x2^2", R));
  EXPECT_THROW(leading_coefficient_in(Polynomial(R), 0), std::invalid_argument);
}

TEST(Polynomial, CoefficientsInVariable) {
  auto R = ring_x(4);
  auto c = coefficients_in(P("x0^2 - x1*x2", R), 0, 2);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], P("1", R));
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], P("-x1*x2", R));
  auto d = coefficients_in(P("x0*x2 - x1^2", R), 0, 1);
  EXPECT_EQ(d[0], P("x2", R));
  EXPECT_EQ(d[1], P("-x1^2", R));
  auto e = coefficients_in(P("x1*x3", R), 0, 0);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], P("x1*x3", R));
  EXPECT_THROW(coefficients_in(P("x0^3", R), 0, 2), std::invalid_argument);
}

TEST(Polynomial, EvaluateAtPoints) {
  auto R = ring_x(3);
  EXPECT_EQ(evaluate(P("x1*x2", R), pt("(1:0:1)")), 0);
  EXPECT_EQ(evaluate(P("x0^2 - x1*x2", R), pt("(1:1:1)")), 0);
  EXPECT_EQ(evaluate(P("x0^2 - x1*x2", R), pt("(1:0:0)")), 1);
  EXPECT_THROW(evaluate(P("x0", R), pt("(1:0)")), std::invalid_argument);
}

TEST(Polynomial, Substitute) {
  auto R = ring_x(4);
  auto Y = make_indexed_ring("y", 4);
  std::map<std::string, Polynomial> relabel{
      {"x0", P("y2", Y)}, {"x1", P("y1", Y)}, {"x2", P("y0", Y)}, {"x3", P("y3", Y)}};
  EXPECT_EQ(substitute(P("x0*x2 - x1^2", R), relabel), P("y0*y2 - y1^2", Y));

  auto R3 = ring_x(3);
  auto st = make_ring({"s", "t"});
  std::map<std::string, Polynomial> line{{"x0", P("s", st)}, {"x1", P("t", st)}, {"x2", P("t", st)}};
  EXPECT_EQ(substitute(P("x0^2 - x1*x2", R3), line), P("s^2 - t^2", st));

  std::vector<Polynomial> identity;
  for (std::size_t i = 0; i < 4; ++i) identity.push_back(Polynomial::variable(R, i));
  auto f = P("x0^3*x1 - 5/3*x2*x3 + 2", R);
  EXPECT_EQ(substitute(f, identity), f);

  std::map<std::string, Polynomial> partial{{"x0", P("s", st)}};
  EXPECT_THROW(substitute(P("x0*x1", R), partial), std::invalid_argument);
}

TEST(Polynomial, WeightedHomogeneity) {
  auto Z = make_indexed_ring("z", 3);
  std::vector<long> omega{0, 1, 2};
  EXPECT_TRUE(is_weighted_homogeneous(P("z1^2 - 4*z0*z2", Z), omega));
  EXPECT_EQ(weighted_degree(P("z1^2 - 4*z0*z2", Z), omega), 2);
  EXPECT_FALSE(is_weighted_homogeneous(P("z0 + z1", Z), omega));
  EXPECT_TRUE(is_weighted_homogeneous(Polynomial(Z), omega));
  std::vector<long> short_weights{0, 1};
  EXPECT_THROW(is_weighted_homogeneous(P("z0", Z), short_weights), std::invalid_argument);
}

TEST(Polynomial, SerializedForm) {
  auto R = ring_x(3);
  EXPECT_EQ(P("x0^2 - x1*x2", R).str(), "x0^2 - x1*x2");
  EXPECT_EQ(P("3/2*x0", R).str(), "3/2*x0");
  EXPECT_EQ(Polynomial(R).str(), "0");
  EXPECT_EQ(P("-x1 + 1", R).str(), "-x1 + 1");
}

TEST(Polynomial, NormalizedRemovesContentAndSign) {
  auto R = ring_x(3);
  EXPECT_EQ(P("-4*x1*x2", R).normalized(), P("x1*x2", R));
  EXPECT_EQ(P("1/2*x0 + 3/4*x1", R).normalized(), P("2*x0 + 3*x1", R));
}

TEST(RingProperties, AxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  auto R = ring_x(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_polynomial(rng, R, 3, 5);
    auto b = random_polynomial(rng, R, 3, 5);
    auto c = random_polynomial(rng, R, 2, 4);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(RingProperties, CoefficientsReassemble) {
  std::mt19937_64 rng(11);
  auto R = ring_x(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_polynomial(rng, R, 4, 6);
    const int k = std::max(0, deg_in(f, std::size_t{0})) + static_cast<int>(trial % 2);
    auto coeffs = coefficients_in(f, 0, k);
    for (const auto& c : coeffs) ASSERT_FALSE(involves(c, 0));
    ASSERT_EQ(assemble_in(coeffs, 0), f);
  }
}

TEST(RingProperties, VanishingIndependentOfRepresentative) {
  std::mt19937_64 rng(5);
  auto R = ring_x(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(rng, R, 3, 4, true);
    std::vector<Scalar> c{random_scalar(rng), random_scalar(rng), random_scalar(rng)};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    Scalar lambda = random_scalar(rng);
    if (lambda == 0) lambda = 3;
    std::vector<Scalar> scaled{lambda * c[0], lambda * c[1], lambda * c[2]};
    ASSERT_EQ(evaluate(f, std::span<const Scalar>(c)) == 0, evaluate(f, std::span<const Scalar>(scaled)) == 0);
  }
  // A representative chosen so that the form vanishes.
  auto g = P("x0^2 - x1*x2", R);
  std::vector<Scalar> on{2, 4, 1};
  std::vector<Scalar> on_scaled{-1, -2, Scalar(-1, 2)};
  EXPECT_EQ(evaluate(g, std::span<const Scalar>(on)), 0);
  EXPECT_EQ(evaluate(g, std::span<const Scalar>(on_scaled)), 0);
}

namespace {

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned e = 0; e <= d; ++e)
    for (auto& m : oracle::monomials_of_degree(n, e)) out.push_back(m);
  return out;
}

void check_order_axioms(const MonomialOrder& order, std::size_t n) {
  const auto monos = monomials_up_to(n, 4);
  const auto small = monomials_up_to(n, 1);
  for (const auto& u : monos) {
    ASSERT_EQ(order.compare(u, u), 0) << order.describe();
    for (const auto& v : monos) {
      const int uv = order.compare(u, v);
      ASSERT_EQ(uv, -order.compare(v, u)) << order.describe();
      ASSERT_EQ(uv == 0, u == v) << order.describe();
      if (uv < 0) {
        for (const auto& w : small) ASSERT_LT(order.compare(u * w, v * w), 0) << order.describe();
      }
    }
  }
  // Transitivity on a sampled triple set; totality is covered above.
  for (std::size_t i = 0; i < monos.size(); i += 3)
    for (std::size_t j = 0; j < monos.size(); j += 2)
      for (std::size_t k = 0; k < monos.size(); k += 5) {
        const auto &a = monos[i], &b = monos[j], &c = monos[k];
        if (order.compare(a, b) < 0 && order.compare(b, c) < 0) ASSERT_LT(order.compare(a, c), 0);
      }
}

} // namespace

TEST(MonomialOrders, TotalAndMultiplicative) {
  for (std::size_t n = 1; n <= 4; ++n) {
    check_order_axioms(MonomialOrder::lex(), n);
    check_order_axioms(MonomialOrder::degrevlex(), n);
    check_order_axioms(MonomialOrder::deglex(), n);
    check_order_axioms(MonomialOrder::elimination_of(0, n), n);
    std::vector<long> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<long>(i) + 1);
    check_order_axioms(MonomialOrder::weighted(w), n);
  }
}

TEST(MonomialOrders, EliminationProperty) {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::vector<bool>> blocks{std::vector<bool>(n, false), std::vector<bool>(n, false)};
    blocks[0][0] = true;
    blocks[1][0] = true;
    blocks[1][1] = true;
    for (const auto& block : blocks) {
      auto order = MonomialOrder::elimination(block);
      check_order_axioms(order, n);
      const auto monos = monomials_up_to(n, 4);
      for (const auto& u : monos) {
        bool u_elim = false;
        for (std::size_t i = 0; i < n; ++i) u_elim = u_elim || (block[i] && u[i] > 0);
        if (!u_elim) continue;
        for (const auto& v : monos) {
          bool v_elim = false;
          for (std::size_t i = 0; i < n; ++i) v_elim = v_elim || (block[i] && v[i] > 0);
          if (!v_elim) ASSERT_GT(order.compare(u, v), 0);
        }
      }
    }
  }
}

TEST(MonomialOrders, KnownComparisons) {
  Monomial a{2, 0, 0}, b{0, 1, 1}, c{1, 0, 2}, d{0, 3, 0};
  EXPECT_GT(MonomialOrder::lex().compare(a, b), 0);
  EXPECT_GT(MonomialOrder::degrevlex().compare(d, c), 0);  // x1^3 > x0*x2^2: x2 has the smaller exponent
  EXPECT_GT(MonomialOrder::deglex().compare(c, d), 0);
  EXPECT_GT(MonomialOrder::elimination_of(0, 3).compare(Monomial{1, 0, 0}, d), 0);
}

TEST(ProjectivePoint, NormalizesFirstNonzero) {
  auto q = pt("(0 : 2 : -4)");
  EXPECT_EQ(q[1], 1);
  EXPECT_EQ(q[2], -2);
  EXPECT_EQ(q.str(), "(0 : 1 : -2)");
  EXPECT_THROW(ProjectivePoint(std::vector<Scalar>{0, 0}), std::invalid_argument);
}

TEST(Polynomial, NonCanonicalRationalsAreReduced) {
  auto R = ring_x(2);
  Scalar six_thirds;
  mpq_set_si(six_thirds.get_mpq_t(), 6, 3);
  Monomial x1{0, 1};
  auto f = Polynomial(R, {{x1, six_thirds}});
  EXPECT_EQ(f, P("2*x1", R));
  EXPECT_EQ(Polynomial::monomial(R, x1, six_thirds), P("2*x1", R));
  EXPECT_EQ(P("x1", R).times(Monomial(2), six_thirds), P("2*x1", R));
  EXPECT_EQ(parse_polynomial(f.str(), R), f);
}
