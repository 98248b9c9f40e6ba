#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "susy/analysis.hpp"
#include "susy/potential.hpp"
#include "susy/spectrum.hpp"
#include "test_oracles.hpp"

namespace susy {
namespace {

const ModelParams kFigure = make_params(7.0, 0.5);

TEST(FindMinimum, FigureRegimeWell) {
  const MinimumReport report = find_minimum(kFigure);
  EXPECT_GT(report.x0, 0.0);
  EXPECT_LT(report.x0, 5.0);
  EXPECT_LT(report.V_min, 0.0);
  // Independent root of V' via scipy brentq on 2 W W' - W''.
  EXPECT_NEAR(report.x0, 0.7496721523544253, 1e-10);
  EXPECT_NEAR(report.V_min, -33.645505679109135, 1e-9);
  EXPECT_LE(report.derivative_residual, 1e-8 * report.derivative_scale);
  EXPECT_GT(potential_closed_form(report.x0 - 0.01, kFigure), report.V_min);
  EXPECT_GT(potential_closed_form(report.x0 + 0.01, kFigure), report.V_min);
}

TEST(FindMinimum, GlobalOnScanRange) {
  const MinimumReport report = find_minimum(kFigure);
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> logx(std::log(2e-3), std::log(100.0));
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp(logx(rng));
    if (std::abs(x - report.x0) < 1e-6) continue;
    EXPECT_GT(potential_closed_form(x, kFigure), report.V_min);
  }
}

TEST(FindMinimum, DimensionalScaling) {
  const MinimumReport base = find_minimum(kFigure);
  const MinimumReport scaled = find_minimum(make_params(14.0, 1.0));
  EXPECT_NEAR(scaled.x0, base.x0 / 2.0, 1e-10);
  EXPECT_NEAR(scaled.V_min, base.V_min * 4.0, 1e-8);
}

TEST(MinPolynomial, PalindromeIsExact) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> num(1, 50);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [B, p] = testing::random_rational_params(rng);
    const Rational t(num(rng), num(rng));
    const auto c = min_polynomial_coefficients<Rational>(B, p);
    for (std::size_t j = 0; j <= 10; ++j) EXPECT_EQ(c[j], c[10 - j]);
    Rational t20 = 1;
    for (int i = 0; i < 20; ++i) t20 *= t;
    EXPECT_EQ(min_polynomial<Rational>(t, B, p), t20 * min_polynomial<Rational>(1 / t, B, p));
  }
}

TEST(MinPolynomial, PrintedCoefficients) {
  const auto c = min_polynomial_coefficients<Rational>(Rational(7), Rational(1, 2));
  // B^2 p + 2 B p^2 at both ends.
  EXPECT_EQ(c[0], Rational(49, 2) + Rational(7, 2));
  EXPECT_EQ(c[10], c[0]);
  EXPECT_EQ(c[5], -36 * 49 * Rational(1, 2) - 90 * 7 * Rational(1, 4) - 54 * Rational(1, 8));
}

TEST(MinPolynomial, RootSitsAtExpOfPTimesMinimum) {
  const MinimumReport report = find_minimum(kFigure);
  EXPECT_LE(report.probe_exp_px0, 1e-6 * report.coefficient_norm);
  EXPECT_GT(report.probe_exp_x0, 1.0 * report.coefficient_norm);
  EXPECT_GE(report.probe_root_count, 1u);
}

TEST(WellCharacteristics, FigureRegime) {
  const WellCharacteristics well = well_characteristics(kFigure);
  EXPECT_GT(well.depth, 240.25);
  EXPECT_GT(well.width, 0.0);
  EXPECT_LT(well.left, well.x0);
  EXPECT_GT(well.right, well.x0);
  EXPECT_NEAR(potential_closed_form(well.left, kFigure), well.half_level, 1e-8 * well.depth);
  EXPECT_NEAR(potential_closed_form(well.right, kFigure), well.half_level, 1e-8 * well.depth);
  EXPECT_EQ(well.n_max, 7u);
}

TEST(WellCharacteristics, DeeperWellHoldsMoreStates) {
  for (double p : {0.25, 0.5, 1.0}) {
    unsigned previous = 0;
    for (double ratio = 1.5; ratio < 12.0; ratio += 2.0) {
      const WellCharacteristics well = well_characteristics(make_params(ratio * p, p));
      EXPECT_GT(well.n_max, previous) << "B = " << ratio * p << ", p = " << p;
      previous = well.n_max;
    }
  }
}

}  // namespace
}  // namespace susy
