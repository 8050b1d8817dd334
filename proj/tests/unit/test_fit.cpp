#include <gtest/gtest.h>

#include <cmath>

#include "arithdyn/growth_fit.hpp"
#include "arithdyn/height.hpp"
#include "arithdyn/height_inequality.hpp"
#include "arithdyn/orbit.hpp"
#include "test_util.hpp"

using namespace arithdyn;
using arithdyn::testing::henon_ab;

TEST(LeastSquares, ExactLine) {
  const std::vector<double> xs{1, 2, 3, 4};
  const std::vector<double> ys{3, 5, 7, 9};
  EXPECT_NEAR(least_squares_slope(xs, ys), 2.0, 1e-14);
  const std::vector<double> same{1, 1};
  EXPECT_THROW(least_squares_slope(same, same), std::invalid_argument);
}

TEST(FitGrowth, RegressorsAndLastHalf) {
  const std::vector<double> b{2, 4, 8, 16};
  std::vector<double> n;
  for (double x : b) n.push_back(3 * std::log(x) + 1);
  EXPECT_NEAR(fit_growth(b, n, Regressor::log_b, false), 3.0, 1e-12);
  EXPECT_NEAR(fit_growth(b, n, Regressor::log_b, true), 3.0, 1e-12);

  const std::vector<double> lin{10, 20, 30, 40};
  const std::vector<double> nlin{21, 41, 61, 500};
  EXPECT_NEAR(fit_growth(lin, nlin, Regressor::b, false), least_squares_slope(lin, nlin), 1e-12);
  EXPECT_NEAR(fit_growth(lin, nlin, Regressor::b, true), (500.0 - 61) / 10, 1e-12);

  const std::vector<double> ne{std::exp(1.0), std::exp(2.0), std::exp(3.0)};
  const std::vector<double> bb{1, 2, 3};
  EXPECT_NEAR(fit_growth(bb, ne, Regressor::b_log, false), 1.0, 1e-12);
}

TEST(FitAlpha, HenonStabilizesAtFiveHalves) {
  const std::vector<double> alphas{2, 2.5, 4};
  const std::vector<double> strata{1, 2, 3};
  const auto fit = fit_alpha(henon_ab(1, 1), alphas, strata);
  ASSERT_EQ(fit.rows.size(), 9u);
  ASSERT_EQ(fit.summaries.size(), 3u);
  EXPECT_EQ(fit.summaries[0].max_deficit, 0.0);
  ASSERT_TRUE(fit.summaries[1].stable.has_value());
  EXPECT_TRUE(*fit.summaries[1].stable);
  EXPECT_TRUE(std::isfinite(fit.summaries[1].max_deficit));
  EXPECT_FALSE(*fit.summaries[2].stable);
  EXPECT_GT(fit.summaries[2].slope, 1.0);
}

TEST(FitAlpha, DeficitMatchesDirectEvaluation) {
  const auto f = henon_ab(1, 1);
  const std::vector<double> alphas{3};
  const std::vector<double> strata{std::log(2.0)};
  const auto fit = fit_alpha(f, alphas, strata);
  ASSERT_EQ(fit.rows.size(), 1u);
  double best = 0;
  for (const auto& p : enumerate_bounded_height(2, std::log(2.0))) {
    const double d =
        3 * weil_height(p) - weil_height(f.forward().apply(p)) - weil_height(f.inverse().apply(p));
    best = std::max(best, d);
  }
  EXPECT_NEAR(fit.rows[0].deficit, best, 1e-12);
  EXPECT_EQ(fit.rows[0].points, 41u);
  EXPECT_FALSE(fit.summaries[0].stable.has_value());
  if (best > 0) {
    const auto& w = fit.rows[0].witness;
    EXPECT_NEAR(3 * weil_height(w) - weil_height(f.forward().apply(w)) - weil_height(f.inverse().apply(w)), best,
                1e-12);
  }
}

TEST(FitAlpha, Errors) {
  const std::vector<double> too_big{100};
  const std::vector<double> strata{1};
  EXPECT_THROW(fit_alpha(henon_ab(1, 1), too_big, strata), std::invalid_argument);
  const std::vector<double> ok{2.5};
  const std::vector<double> huge{12};
  EXPECT_THROW(fit_alpha(henon_ab(1, 1), ok, huge), EnumerationCapExceeded);
}
