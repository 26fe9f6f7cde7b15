#include <gtest/gtest.h>

#include "ramify/errors.hpp"
#include "support.hpp"

using namespace ramify;
using namespace ramify::testing;

namespace {

ParseError parse_error_of(const std::string& text, const RingPtr& ring) {
  try {
    parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseError("", 0, 0);
}

const char* kConic = R"(# conic
ring x0, x1, x2;
ideal x0^2 - x1*x2;
center (1 : 0 : 0);
)";

} // namespace

TEST(ParsePolynomial, Examples) {
  auto R = ring_x(3);
  auto f = parse_polynomial("x0*x2 - x1^2", R);
  EXPECT_EQ(f, P("x0*x2", R) - P("x1", R) * P("x1", R));
  auto g = parse_polynomial("(x0 - x1)^2", R);
  EXPECT_EQ(g, P("x0^2 - 2*x0*x1 + x1^2", R));
  auto h = parse_polynomial("3/2*x0", R);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.leading_term().coefficient, Scalar(3, 2));
}

TEST(ParsePolynomial, WhitespaceAndSigns) {
  auto R = ring_x(2);
  EXPECT_EQ(parse_polynomial("  -x0 +  x1 ", R), P("x1 - x0", R));
  EXPECT_EQ(parse_polynomial("-(x0 - x1)", R), P("x1 - x0", R));
  EXPECT_EQ(parse_polynomial("2*3/4", R), P("3/2", R));
  EXPECT_EQ(parse_polynomial("x0^0", R), P("1", R));
}

TEST(ParsePolynomial, ErrorsCarryPositions) {
  auto R = ring_x(3);
  auto e1 = parse_error_of("x0 + 2x1", R);
  EXPECT_EQ(e1.line(), 1u);
  EXPECT_EQ(e1.column(), 7u);
  auto e2 = parse_error_of("x0x1", R);
  EXPECT_EQ(e2.column(), 1u);
  EXPECT_NE(e2.message().find("implicit multiplication"), std::string::npos);
  auto e3 = parse_error_of("x0^-1", R);
  EXPECT_EQ(e3.column(), 4u);
  EXPECT_NE(e3.message().find("malformed exponent"), std::string::npos);
  auto e4 = parse_error_of("x0 $ x1", R);
  EXPECT_EQ(e4.column(), 4u);
  auto e5 = parse_error_of("x0 +\n  y", R);
  EXPECT_EQ(e5.line(), 2u);
  EXPECT_EQ(e5.column(), 3u);
  EXPECT_NE(e5.message().find("unknown variable"), std::string::npos);
  auto e6 = parse_error_of("(x0 + x1", R);
  EXPECT_EQ(e6.column(), 9u);
  auto e7 = parse_error_of("x0/2", R);
  EXPECT_EQ(e7.column(), 3u);
  auto e8 = parse_error_of("1/0", R);
  EXPECT_EQ(e8.column(), 3u);
  auto e9 = parse_error_of("x0^2.5", R);
  EXPECT_EQ(e9.column(), 5u);
}

TEST(ParsePoint, NormalizesAndRejectsZero) {
  EXPECT_EQ(parse_point("(2 : -4 : 1/2)").str(), "(1 : -2 : 1/4)");
  EXPECT_THROW(parse_point("(0 : 0)"), ParseError);
  EXPECT_THROW(parse_point("(1, 0)"), ParseError);
}

TEST(Serialize, Examples) {
  auto R = ring_x(3);
  EXPECT_EQ(serialize(P("x0^2 - x1*x2", R)), "x0^2 - x1*x2");
  EXPECT_EQ(serialize(Ideal(R)), "{0}");
  EXPECT_EQ(serialize(conic()), "{x0^2 - x1*x2}");
}

TEST(Serialize, RoundTripsRandomPolynomials) {
  std::mt19937_64 rng(2024);
  std::vector<RingPtr> rings{ring_x(3), make_ring({"a", "b_1", "zeta"}), make_indexed_ring("x", 6)};
  for (int trial = 0; trial < 1000; ++trial) {
    const RingPtr& R = rings[static_cast<std::size_t>(trial) % rings.size()];
    auto f = random_polynomial(rng, R, 5, 1 + static_cast<std::size_t>(trial % 8));
    ASSERT_EQ(parse_polynomial(serialize(f), R), f) << serialize(f);
  }
}

TEST(ParseFuzz, NeverCrashes) {
  std::mt19937_64 rng(99);
  const std::vector<std::string> pieces{"x0", "x1", "x2", "x9", "x0x1", "1", "2", "3/4", "0", "+", "-",
                                        "*", "/", "^", "(", ")", " ", ":", ";", ",", "->", "\n",
                                        "@", "2x", "1.5", "#", "ring", "ideal", "center"};
  auto R = ring_x(3);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 14);
  int parsed = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text += pieces[pick(rng)];
    try {
      parse_polynomial(text, R);
      ++parsed;
    } catch (const ParseError& e) {
      ASSERT_GE(e.line(), 1u);
      ASSERT_GE(e.column(), 1u);
    }
    try {
      parse_problem(text);
    } catch (const ParseError&) {
    } catch (const InputRejected&) {
    }
  }
  EXPECT_GT(parsed, 0);
}

TEST(ParseFuzz, DeepNestingIsAnError) {
  auto R = ring_x(1);
  std::string text(5000, '(');
  text += "x0";
  text += std::string(5000, ')');
  EXPECT_THROW(parse_polynomial(text, R), ParseError);
}

TEST(ParseProblem, ConicFile) {
  auto problem = parse_problem(kConic);
  EXPECT_EQ(problem.ring->size(), 3u);
  ASSERT_EQ(problem.ideal.generators().size(), 1u);
  EXPECT_EQ(problem.ideal.generators()[0].str(), "x0^2 - x1*x2");
  EXPECT_EQ(problem.center, pt("(1:0:0)"));
  EXPECT_TRUE(problem.points.empty());
  EXPECT_FALSE(problem.parametrization);
}

TEST(ParseProblem, TwistedCubicCenters) {
  const std::string body = "ring x0, x1, x2, x3;\nideal x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2;\n";
  auto ok = parse_problem(body + "center (0:0:1:0);");
  EXPECT_EQ(ok.ideal.generators().size(), 3u);
  EXPECT_THROW(parse_problem(body + "center (1:0:0:0);"), CenterOnScheme);
  try {
    parse_problem(body + "center (1:0:0:0);");
  } catch (const InputRejected& e) {
    EXPECT_EQ(e.code(), "CENTER_ON_SCHEME");
  }
}

TEST(ParseProblem, OptionalSections) {
  auto problem = parse_problem(std::string(kConic) +
                               "points (0:1:1), (0 : 1 : 0);\npartitions (2), (1,1);\n"
                               "parametrization (s, t) -> (s*t, s^2, t^2);\n");
  ASSERT_EQ(problem.points.size(), 2u);
  EXPECT_EQ(problem.points[1], pt("(0:1:0)"));
  ASSERT_EQ(problem.partitions.size(), 2u);
  EXPECT_EQ(problem.partitions[1].str(), "(1,1)");
  ASSERT_TRUE(problem.parametrization);
  auto q = problem.parametrization->point_at({Scalar(2), Scalar(3)});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, pt("(6:4:9)"));
  EXPECT_FALSE(problem.parametrization->point_at({Scalar(0), Scalar(0)}));
}

TEST(ParseProblem, Rejections) {
  EXPECT_THROW(parse_problem("ring x0, x1;\nideal x0;\n"), ParseError);
  EXPECT_THROW(parse_problem("ideal x0;\nring x0;\ncenter (1);"), ParseError);
  EXPECT_THROW(parse_problem("ring x0, x0;\nideal x0;\ncenter (1:0);"), ParseError);
  EXPECT_THROW(parse_problem("ring x0, x1;\nideal x0;\ncenter (0:1:0);"), ParseError);
  EXPECT_THROW(parse_problem("ring x0, x1;\nideal x0;\nideal x1;\ncenter (0:1);"), ParseError);
  EXPECT_THROW(parse_problem("ring x0, x1;\nideal x0;\ncenter (0:1)"), ParseError);
  EXPECT_THROW(parse_problem("ring x0, x1;\nideal x0;\ncenter (0:1);\nfoo x;"), ParseError);
  EXPECT_THROW(parse_problem("ring x0, x1;\nideal x0;\ncenter (0:1);\n"
                             "parametrization (s, t) -> (s, t^2);"),
               ParseError);
  try {
    parse_problem("ring x0, x1;\nideal x0^2 - x1;\ncenter (0:1);");
    ADD_FAILURE();
  } catch (const InputRejected& e) {
    EXPECT_EQ(e.code(), "NOT_HOMOGENEOUS");
  }
  try {
    parse_problem("ring x0, x1;\nideal x0;\ncenter (0:1);");
    ADD_FAILURE();
  } catch (const CenterOnScheme&) {
  }
}

TEST(ParseProblem, ErrorLineNumbers) {
  try {
    parse_problem("ring x0, x1;\n# comment\nideal x0 + y;\ncenter (0:1);");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 12u);
  }
}
