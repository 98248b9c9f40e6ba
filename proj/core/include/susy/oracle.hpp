#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "susy/hyperpoly.hpp"
#include "susy/params.hpp"
#include "susy/potential.hpp"

namespace susy {

/// Uniform grid of N interior points x_i = x_min + i h, i = 1..N, with
/// h = (x_max - x_min)/(N + 1). Values are implied zero at both ends.
class RadialGrid {
 public:
  static constexpr std::size_t kMinPoints = 100;

  RadialGrid(double x_min, double x_max, std::size_t points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return points_; }
  double spacing() const noexcept { return h_; }
  /// Zero-based: at(0) is x_1.
  double at(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i + 1) * h_; }
  std::vector<double> points() const;

 private:
  double x_min_;
  double x_max_;
  std::size_t points_;
  double h_;
};

/// Grid sized for the model: x_min from the x^{B/p} regularity at the
/// origin, x_max from the slowest closed-form decay rate.
RadialGrid default_grid(const ModelParams& params, std::size_t points = 12000);

struct DiscretizedHamiltonian {
  RadialGrid grid;
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
  /// Gershgorin bound on the spectral radius.
  double norm_bound() const;
  std::vector<double> apply(std::span<const double> v) const;
};

/// Central differences for -d^2/dx^2 + V with Dirichlet ends.
/// Throws ConvergenceError if V is not finite at any grid point.
DiscretizedHamiltonian build_hamiltonian(const RadialGrid& grid, const std::function<double(double)>& potential);
/// Uses the closed-form potential scaled by (1 + perturbation).
DiscretizedHamiltonian build_hamiltonian(const ModelParams& params, const RadialGrid& grid,
                                         double perturbation = 0.0);

/// Number of eigenvalues strictly below `shift` (Sturm sequence count).
std::size_t sturm_count(const DiscretizedHamiltonian& H, double shift);

/// The m smallest eigenvalues in ascending order, each isolated by
/// bisection on the Sturm count. Brackets are fixed, so the result does not
/// depend on evaluation order.
std::vector<double> lowest_eigenvalues(const DiscretizedHamiltonian& H, std::size_t m);

/// Eigenvalues below `threshold`, at most `limit` of them.
std::vector<double> eigenvalues_below(const DiscretizedHamiltonian& H, double threshold, std::size_t limit);

struct EigenResult {
  std::size_t index = 0;
  double eigenvalue = 0.0;
  std::vector<double> eigenvector;  // unit trapezoid norm, positive near x_min
  std::size_t node_count = 0;
  double residual = 0.0;            // ||Hv - lambda v|| / ||v||
};

/// Shifted inverse iteration. Throws ConvergenceError if the residual does
/// not reach 1e-8 * ||H||.
EigenResult eigenvector_for(const DiscretizedHamiltonian& H, double eigenvalue, std::size_t index = 0);

enum class LadderSign { Creation, Annihilation };

/// (-d/dx + W(a_k)) for Creation, (d/dx + W(a_k)) for Annihilation, with a
/// five-point derivative (one-sided near the ends).
std::vector<double> apply_ladder_numeric(const ModelParams& params, unsigned k, LadderSign sign,
                                         std::span<const double> values, const RadialGrid& grid);

/// -f'' + V f with a five-point second derivative; the two points at each
/// end are left at zero.
std::vector<double> apply_schrodinger_numeric(const RadialGrid& grid, std::span<const double> values,
                                              const std::function<double(double)>& potential);

std::vector<double> derivative_numeric(std::span<const double> values, double h);

/// Trapezoid rule over the grid points.
double inner_product(std::span<const double> a, std::span<const double> b, const RadialGrid& grid);
double l2_norm(std::span<const double> values, const RadialGrid& grid);

/// Strict sign changes, ignoring entries with |v| < 1e-12 * max|v|.
std::size_t count_nodes(std::span<const double> values);

/// Samples of `form` on the grid, rescaled to unit trapezoid norm.
std::vector<double> sample_normalized(const HyperbolicForm& form, const RadialGrid& grid);

}  // namespace susy
