#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "susy/analysis.hpp"
#include "susy/hyperpoly.hpp"
#include "susy/oracle.hpp"
#include "susy/params.hpp"

namespace susy {

// Cross-checks between the closed-form layer and the numerical oracle.

/// Largest |V_+(x, a_k) - V_-(x, a_{k+1}) - C(a_k)| / max(1, |V_+|) over
/// `points` log-spaced x in [x_lo, x_hi] and k in [k_first, k_last].
double max_shape_invariance_residual(const ModelParams& params, unsigned k_first, unsigned k_last,
                                     std::size_t points = 10000, double x_lo = 1e-3, double x_hi = 30.0);

/// ||(-d^2/dx^2 + V - E) psi|| / ||E_asym psi|| on the grid, with psi''
/// taken analytically from the form.
double eigenfunction_residual(const HyperbolicForm& form, const ModelParams& params, double energy,
                              const RadialGrid& grid);

/// ||A psi_0|| / ||psi_0|| with A = d/dx + W(a_0) applied numerically.
double annihilation_residual(const ModelParams& params, const RadialGrid& grid);

/// Largest |<psi_m, psi_n>| over m < n for unit-normalized samples.
double max_overlap(const std::vector<std::vector<double>>& normalized, const RadialGrid& grid);

/// Largest pointwise gap between two unit-norm vectors (sign aligned),
/// relative to max|reference|. A per-point ratio blows up at nodes and next
/// to the Dirichlet cut at x_min.
double max_relative_gap(const std::vector<double>& reference, const std::vector<double>& candidate);

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationOptions {
  std::optional<RadialGrid> grid;       // default_grid(params) when empty
  double perturbation = 0.0;            // oracle potential scaled by (1 + perturbation)
  std::size_t residual_points = 4000;   // grid size for analytic residuals
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<double> closed_energies;
  std::vector<double> numeric_energies;
  MinimumReport minimum;

  bool passed() const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
};

ValidationReport run_validation(const ModelParams& params, const ValidationOptions& options = {});

}  // namespace susy
