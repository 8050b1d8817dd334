#include <gtest/gtest.h>

#include <random>

#include "arithdyn/polynomial.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace arithdyn;
using arithdyn::testing::poly;
using arithdyn::testing::pt;

namespace {

const std::vector<std::string> kX12{"x1", "x2"};

MultiPoly random_poly(std::mt19937& rng, std::size_t dim, unsigned max_deg, int terms) {
  MultiPoly p(dim);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Monomial m(dim);
    unsigned budget = max_deg;
    for (std::size_t i = 0; i < dim; ++i) {
      m[i] = std::min(budget, e(rng));
      budget -= m[i];
    }
    p += MultiPoly::term(m, oracle::random_rational(rng, 5));
  }
  return p;
}

}  // namespace

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(poly("x1^2 + 1", {"x1"}), pt("0")), 1);
  EXPECT_EQ(poly_eval(poly("x1*x2", kX12), pt("3/2, 4")), 6);
  EXPECT_EQ(poly_eval(poly("x1^3 - x2", kX12), pt("2, 8")), 0);
}

TEST(PolyEval, DimensionMismatch) {
  EXPECT_THROW(poly_eval(poly("x1*x2", kX12), pt("1")), DimensionMismatch);
}

TEST(PolyCompose, Examples) {
  const std::vector<std::string> x1{"x1"};
  const std::vector<MultiPoly> sum{poly("x1 + x2", kX12)};
  const MultiPoly square = MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0);
  EXPECT_EQ(poly_compose(square, sum), poly("x1^2 + 2*x1*x2 + x2^2", kX12));

  const std::vector<MultiPoly> qs{poly("x1^2 + 3", kX12), poly("x1*x2 - 1/2", kX12)};
  EXPECT_EQ(poly_compose(poly("x2", kX12), qs), qs[1]);

  const std::vector<MultiPoly> same{poly("x2", kX12), poly("x2", kX12)};
  const auto zero = poly_compose(poly("x1 - x2", kX12), same);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.degree().is_neg_infinity());
  EXPECT_EQ(zero.num_terms(), 0u);
}

TEST(PolyCompose, DimensionMismatch) {
  const std::vector<MultiPoly> one{poly("x1", kX12)};
  EXPECT_THROW(poly_compose(poly("x1 + x2", kX12), one), DimensionMismatch);
  const std::vector<MultiPoly> mixed{poly("x1", kX12), MultiPoly::variable(3, 0)};
  EXPECT_THROW(poly_compose(poly("x1 + x2", kX12), mixed), DimensionMismatch);
}

TEST(LeadingForm, Examples) {
  EXPECT_EQ(leading_form(poly("x1^2 + x2 + 1", kX12)), poly("x1^2", kX12));
  const auto homog = poly("x1^2 + x1*x2", kX12);
  EXPECT_EQ(leading_form(homog), homog);
  EXPECT_THROW(leading_form(MultiPoly(2)), std::invalid_argument);
}

TEST(LeadingForm, Idempotent) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng, 3, 5, 6);
    if (p.is_zero()) continue;
    const auto lf = leading_form(p);
    EXPECT_EQ(leading_form(lf), lf);
    EXPECT_TRUE(lf.is_homogeneous());
    EXPECT_EQ(lf.degree(), p.degree());
  }
}

TEST(Degree, ZeroPolynomialMarker) {
  const MultiPoly zero(2);
  EXPECT_TRUE(zero.degree().is_neg_infinity());
  EXPECT_THROW((void)zero.degree().value(), std::logic_error);
  EXPECT_LT(zero.degree(), Degree(0));
  EXPECT_EQ(zero.degree().to_string(), "-inf");
  EXPECT_EQ(poly("7").degree(), Degree(0));
}

TEST(Polynomial, ZeroCoefficientsNeverStored) {
  auto p = poly("x + y");
  p -= poly("x");
  EXPECT_EQ(p, poly("y"));
  EXPECT_EQ(p.num_terms(), 1u);
  EXPECT_TRUE((p * Rational(0)).is_zero());
}

TEST(Polynomial, CanonicalPrinting) {
  EXPECT_EQ(to_string(poly("1 + 2*x + y^2")), "y^2 + 2*x + 1");
  EXPECT_EQ(to_string(poly("-1/2*x")), "-1/2*x");
  EXPECT_EQ(to_string(poly("0")), "0");
  EXPECT_EQ(to_string(poly("(x - y)^2")), "x^2 - 2*x*y + y^2");
}

TEST(Parser, Grammar) {
  EXPECT_EQ(poly("y^2 + 1 + 2*x"), poly("2*x + y*y + 1"));
  EXPECT_EQ(poly(" ( x + 1 ) ^ 2 "), poly("x^2 + 2*x + 1"));
  EXPECT_EQ(poly("-(x - 3/4)"), poly("3/4 - x"));
  EXPECT_EQ(poly("2^3*x"), poly("8*x"));
}

TEST(Parser, Errors) {
  EXPECT_THROW(poly("x +"), PolyParseError);
  EXPECT_THROW(poly("z"), PolyParseError);
  EXPECT_THROW(poly("x^-1"), PolyParseError);
  EXPECT_THROW(poly("(x"), PolyParseError);
  EXPECT_THROW(poly("x / y"), PolyParseError);
  EXPECT_THROW(poly("1/0"), std::invalid_argument);
}

TEST(Parser, PrintParseRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto p = random_poly(rng, 2, 6, 5);
    EXPECT_EQ(poly(to_string(p)), p);
  }
}

TEST(PolyProperties, CompositionAssociative) {
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_poly(rng, 2, 3, 4);
    const std::vector<MultiPoly> qs{random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
    const std::vector<MultiPoly> ss{random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
    const MultiPoly lhs = poly_compose(poly_compose(p, qs), ss);
    const std::vector<MultiPoly> qs_of_s{poly_compose(qs[0], ss), poly_compose(qs[1], ss)};
    EXPECT_EQ(lhs, poly_compose(p, qs_of_s));
  }
}

TEST(PolyProperties, EvaluationCommutesWithComposition) {
  std::mt19937 rng(2);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_poly(rng, 3, 4, 5);
    const std::vector<MultiPoly> qs{random_poly(rng, 3, 3, 3), random_poly(rng, 3, 3, 3), random_poly(rng, 3, 3, 3)};
    RationalVector x;
    for (int k = 0; k < 3; ++k) x.push_back(oracle::random_rational(rng, 9));
    RationalVector inner;
    for (const auto& qi : qs) inner.push_back(poly_eval(qi, x));
    EXPECT_EQ(poly_eval(poly_compose(p, qs), x), poly_eval(p, inner));
  }
}

TEST(PolyProperties, DegreeSubmultiplicative) {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_poly(rng, 2, 4, 4);
    const std::vector<MultiPoly> qs{random_poly(rng, 2, 3, 3), random_poly(rng, 2, 3, 3)};
    const auto c = poly_compose(p, qs);
    if (c.is_zero() || p.is_zero()) continue;
    unsigned maxq = 0;
    for (const auto& qi : qs)
      if (!qi.is_zero()) maxq = std::max(maxq, qi.degree().value());
    EXPECT_LE(c.degree().value(), p.degree().value() * maxq);
  }
}

TEST(PolyProperties, MultiplicationMatchesPointwise) {
  std::mt19937 rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_poly(rng, 2, 4, 5);
    const auto b = random_poly(rng, 2, 4, 5);
    const RationalVector x{oracle::random_rational(rng, 7), oracle::random_rational(rng, 7)};
    EXPECT_EQ(poly_eval(a * b, x), poly_eval(a, x) * poly_eval(b, x));
    EXPECT_EQ(poly_eval(pow(a, 3), x), poly_eval(a, x) * poly_eval(a, x) * poly_eval(a, x));
  }
}

TEST(PolyGuard, CoefficientGrowthFailsLoudly) {
  SizeGuard guard{64};
  const auto p = poly("1000*x + 1000");
  EXPECT_THROW(pow(p, 20, guard), SizeLimitExceeded);
  EXPECT_THROW(poly_eval(p, pt("1/3, 0"), SizeGuard{4}), SizeLimitExceeded);
}
