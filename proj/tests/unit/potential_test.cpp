#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "susy/potential.hpp"
#include "test_oracles.hpp"

namespace susy {
namespace {

class FigureRegime : public ::testing::Test {
 protected:
  ModelParams params = make_params(7.0, 0.5);
  Rung r0 = rung(params, 0);
};

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return xs;
}

TEST_F(FigureRegime, SuperpotentialLimitAndValue) {
  EXPECT_NEAR(superpotential(60.0, r0), 15.5, 1e-12);
  EXPECT_DOUBLE_EQ(superpotential(1000.0, r0), 15.5);
  EXPECT_DOUBLE_EQ(superpotential(1.0, r0), 22.5 * std::tanh(1.5) - 7.0 / std::tanh(0.5));
}

TEST_F(FigureRegime, SuperpotentialHasSingleNodeAndIncreases) {
  const auto xs = log_spaced(1e-3, 25.0, 4000);  // W is flat to double precision beyond ~32
  std::size_t sign_changes = 0;
  double previous = superpotential(xs[0], r0);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double w = superpotential(xs[i], r0);
    EXPECT_GT(w, previous) << "at x = " << xs[i];
    if ((w > 0) != (previous > 0)) ++sign_changes;
    previous = w;
  }
  EXPECT_EQ(sign_changes, 1u);
}

TEST_F(FigureRegime, DerivativeMatchesFiniteDifferences) {
  const auto W = [this](double x) { return superpotential(x, r0); };
  const auto Wp = [this](double x) { return superpotential_derivative(x, r0); };
  for (double x : log_spaced(0.05, 20.0, 200)) {
    const double analytic = superpotential_derivative(x, r0);
    EXPECT_GT(analytic, 0.0);
    EXPECT_NEAR(analytic, testing::central_difference(W, x, 1e-5), 1e-6 * std::abs(analytic) + 1e-9);
    const double second = superpotential_second_derivative(x, r0);
    EXPECT_NEAR(second, testing::central_difference(Wp, x, 1e-5), 1e-6 * std::abs(second) + 1e-7);
  }
  EXPECT_DOUBLE_EQ(superpotential_derivative(1000.0, r0), 0.0);
  // Only the coth term survives: p B csch^2(p x) ~ 4 p B e^{-2 p x}.
  EXPECT_NEAR(superpotential_derivative(60.0, r0), 14.0 * std::exp(-60.0), 1e-9 * 14.0 * std::exp(-60.0));
}

TEST_F(FigureRegime, PartnersDifferByTwiceDerivative) {
  for (double x : log_spaced(0.01, 30.0, 100)) {
    const double gap = partner_plus(x, r0) - partner_minus(x, r0);
    EXPECT_NEAR(gap, 2.0 * superpotential_derivative(x, r0), 1e-12 * std::abs(partner_plus(x, r0)) + 1e-12);
  }
  EXPECT_NEAR(partner_minus(80.0, r0), 240.25, 1e-9);
}

TEST_F(FigureRegime, PartnerMinusIsClosedFormPotential) {
  for (double x : log_spaced(1e-3, 40.0, 1000)) {
    const double closed = potential_closed_form(x, params);
    EXPECT_NEAR(partner_minus(x, r0), closed, 1e-10 * std::max(1.0, std::abs(closed))) << "x = " << x;
  }
}

TEST_F(FigureRegime, ClosedFormLimits) {
  EXPECT_NEAR(potential_closed_form(60.0, params), 240.25, 1e-9);
  EXPECT_DOUBLE_EQ(potential_closed_form(1e4, params), 240.25);
  // V x^2 -> (B/p)(B/p - 1) = 182 with an O(x^2) correction; Richardson in x^2.
  const double a = potential_closed_form(1e-4, params) * 1e-8;
  const double b = potential_closed_form(1e-5, params) * 1e-10;
  const double extrapolated = (100.0 * b - a) / 99.0;
  EXPECT_NEAR(extrapolated, 182.0, 1e-6);
  EXPECT_NEAR(b, 182.0, 1e-4);
}

TEST_F(FigureRegime, ClosedFormDerivativeMatchesFiniteDifferences) {
  const auto V = [this](double x) { return potential_closed_form(x, params); };
  for (double x : log_spaced(0.05, 20.0, 150)) {
    const double analytic = potential_derivative(x, params);
    EXPECT_NEAR(analytic, testing::five_point_derivative(V, x, 1e-4 * x), 1e-7 * std::max(1.0, std::abs(analytic)));
  }
}

TEST_F(FigureRegime, NoOverflowDeepInTheTail) {
  for (double x : {300.0, 500.0, 699.0, 701.0, 5000.0}) {
    EXPECT_TRUE(std::isfinite(superpotential(x, r0)));
    EXPECT_TRUE(std::isfinite(superpotential_derivative(x, r0)));
    EXPECT_TRUE(std::isfinite(potential_closed_form(x, params)));
    EXPECT_TRUE(std::isfinite(shape_invariance_residual(x, params, 0)));
  }
}

TEST_F(FigureRegime, DomainAndSingularSentinel) {
  EXPECT_THROW(superpotential(0.0, r0), DomainError);
  EXPECT_THROW(superpotential_derivative(-1.0, r0), DomainError);
  EXPECT_THROW(potential_closed_form(0.0, params), DomainError);
  EXPECT_THROW(shape_invariance_residual(-0.5, params, 0), DomainError);
  EXPECT_TRUE(is_singular_sentinel(potential_closed_form(1e-9, params)));
  EXPECT_TRUE(is_singular_sentinel(superpotential(1e-9, r0)));
  EXPECT_FALSE(is_singular_sentinel(potential_closed_form(1e-6, params)));
}

TEST_F(FigureRegime, ShapeInvarianceHoldsOnFirstRung) {
  for (double x : log_spaced(0.1, 10.0, 500)) {
    const double bound = 1e-9 * std::max(1.0, std::abs(partner_plus(x, r0)));
    EXPECT_LE(std::abs(shape_invariance_residual(x, params, 0)), bound) << "x = " << x;
  }
}

TEST_F(FigureRegime, WrongShiftIsDetected) {
  const double shift = to_double(shift_constant(params, 0)) + 1.0;
  for (double x : log_spaced(0.1, 10.0, 50)) {
    EXPECT_NEAR(shape_invariance_residual(x, params, 0, shift), -1.0, 1e-9 * std::abs(partner_plus(x, r0)));
  }
}

// Expanding W^2 +- W' for the ladder gives the rung-k defect
// 2 (A_k B_k - A_{k+1} B_{k+1}) (1 - tanh 3px coth px) = 12 k p^2 (1 - tanh 3px coth px),
// which vanishes only for k = 0.
TEST_F(FigureRegime, HigherRungDefectMatchesExpansion) {
  const double p = 0.5;
  for (unsigned k = 1; k <= 7; ++k) {
    for (double x : log_spaced(0.05, 10.0, 60)) {
      const double expected = 12.0 * k * p * p * (1.0 - std::tanh(3.0 * p * x) / std::tanh(p * x));
      const double residual = shape_invariance_residual(x, params, k);
      EXPECT_NEAR(residual, expected, 1e-9 * std::max(1.0, std::abs(partner_plus(x, rung(params, k)))));
    }
  }
  EXPECT_NEAR(shape_invariance_residual(0.1, params, 1), -5.9405, 1e-4);
}

}  // namespace
}  // namespace susy
