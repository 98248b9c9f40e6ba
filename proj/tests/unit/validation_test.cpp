#include <gtest/gtest.h>

#include <algorithm>

#include "susy/oracle.hpp"
#include "susy/spectrum.hpp"
#include "susy/validation.hpp"

namespace susy {
namespace {

const CheckResult& find_check(const ValidationReport& report, const std::string& name) {
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [&name](const CheckResult& c) { return c.name == name; });
  if (it == report.checks.end()) throw std::runtime_error("missing check " + name);
  return *it;
}

// psi_0 ~ x^1.2 at the origin: the uniform default grid cannot push the
// stencil error in A psi_0 below 1e-5, a refined one can.
TEST(Validation, SmallWellAnnihilationNeedsRefinedGrid) {
  const ModelParams params = make_params(Rational(3, 5), Rational(1, 2));
  const ValidationReport coarse = run_validation(params);
  for (const auto& check : coarse.checks) {
    if (check.name == "annihilation") {
      EXPECT_FALSE(check.passed);
      EXPECT_LT(check.measured, 1e-3);
    } else {
      EXPECT_TRUE(check.passed) << check.name << ": " << check.measured;
    }
  }
}

TEST(Validation, SmallWellPassesEveryCheck) {
  const ModelParams params = make_params(Rational(3, 5), Rational(1, 2));
  const RadialGrid base = default_grid(params);
  ValidationOptions options;
  options.grid = RadialGrid(base.x_min(), base.x_max(), 200000);
  const ValidationReport report = run_validation(params, options);
  for (const auto& check : report.checks) {
    EXPECT_TRUE(check.passed) << check.name << ": " << check.measured << " vs " << check.threshold << " "
                              << check.detail;
  }
  ASSERT_EQ(report.numeric_energies.size(), 2u);
  EXPECT_NEAR(report.numeric_energies[1], 6.8, 1e-3);
}

TEST(Validation, PerturbedPotentialIsCaught) {
  ValidationOptions options;
  options.perturbation = 0.1;
  const ValidationReport report = run_validation(make_params(Rational(3, 5), Rational(1, 2)), options);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(find_check(report, "energies").passed);
}

// The closed form for the figure regime agrees with the eigensolver only on
// the first two levels; rungs k >= 1 are not shape invariant.
TEST(Validation, FigureRegimeExposesHigherLevelMismatch) {
  const ValidationReport report = run_validation(make_params(7.0, 0.5));
  EXPECT_FALSE(find_check(report, "shape_invariance").passed);
  EXPECT_FALSE(find_check(report, "energies").passed);
  EXPECT_TRUE(find_check(report, "annihilation").passed);
  EXPECT_TRUE(find_check(report, "minimum").passed);
  EXPECT_NEAR(report.numeric_energies[0], 0.0, 0.05);
  EXPECT_NEAR(report.numeric_energies[1], 58.0, 0.05);
  EXPECT_NEAR(report.numeric_energies[2], 105.116, 0.01);
}

// n_max = 1 here, so no higher rung enters the closed form, yet the true
// well binds a third level below (2B + 3p)^2 = 15.21.
TEST(Validation, ClosedFormMissesThirdLevelOfModerateWell) {
  const ValidationReport report = run_validation(make_params(Rational(6, 5), Rational(1, 2)));
  const CheckResult& count = find_check(report, "bound_state_count");
  EXPECT_FALSE(count.passed);
  EXPECT_EQ(count.measured, 3.0);
  EXPECT_TRUE(find_check(report, "energies").passed);
  EXPECT_TRUE(find_check(report, "wavefunction_agreement").passed);
}

TEST(Validation, ShapeResidualScanSeparatesRungs) {
  const ModelParams params = make_params(7.0, 0.5);
  EXPECT_LE(max_shape_invariance_residual(params, 0, 0), 1e-9);
  EXPECT_GT(max_shape_invariance_residual(params, 1, 1), 1e-3);
}

}  // namespace
}  // namespace susy
