#include "susy/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "susy/potential.hpp"
#include "susy/spectrum.hpp"

namespace susy {

namespace {

std::string format_value(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

CheckResult bounded_check(std::string name, double measured, double threshold, std::string detail = {}) {
  const bool ok = std::isfinite(measured) && measured <= threshold;
  return CheckResult{std::move(name), ok, measured, threshold, std::move(detail)};
}

}  // namespace

double max_shape_invariance_residual(const ModelParams& params, unsigned k_first, unsigned k_last,
                                     std::size_t points, double x_lo, double x_hi) {
  double worst = 0.0;
  const double ratio = std::pow(x_hi / x_lo, 1.0 / static_cast<double>(points - 1));
  for (unsigned k = k_first; k <= k_last; ++k) {
    const Rung here = rung(params, k);
    const double shift = to_double(shift_constant(params, k));
    double x = x_lo;
    for (std::size_t i = 0; i < points; ++i, x *= ratio) {
      const double v_plus = partner_plus(x, here);
      const double residual = shape_invariance_residual(x, params, k, shift);
      worst = std::max(worst, std::abs(residual) / std::max(1.0, std::abs(v_plus)));
    }
  }
  return worst;
}

double eigenfunction_residual(const HyperbolicForm& form, const ModelParams& params, double energy,
                              const RadialGrid& grid) {
  const FormEvaluator psi(form);
  const std::size_t n = grid.size();
  std::vector<ScaledDerivatives> raw(n);
  std::vector<double> potential(n);
  double top = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.at(i);
    raw[i] = psi.derivatives(x);
    potential[i] = potential_closed_form(x, params);
    if (raw[i].value != 0.0) top = std::max(top, raw[i].log_scale + std::log(std::abs(raw[i].value)));
  }
  std::vector<double> values(n), residual(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = std::exp(raw[i].log_scale - top);
    values[i] = raw[i].value * scale;
    residual[i] = (-raw[i].second + (potential[i] - energy) * raw[i].value) * scale;
  }
  const double asymptote = to_double(params.asymptote());
  return l2_norm(residual, grid) / (asymptote * l2_norm(values, grid));
}

double annihilation_residual(const ModelParams& params, const RadialGrid& grid) {
  const std::vector<double> ground = sample_normalized(ground_form(ladder(params, 0), params.p()), grid);
  const std::vector<double> image = apply_ladder_numeric(params, 0, LadderSign::Annihilation, ground, grid);
  return l2_norm(image, grid) / l2_norm(ground, grid);
}

double max_overlap(const std::vector<std::vector<double>>& normalized, const RadialGrid& grid) {
  double worst = 0.0;
  for (std::size_t m = 0; m < normalized.size(); ++m) {
    for (std::size_t n = m + 1; n < normalized.size(); ++n) {
      worst = std::max(worst, std::abs(inner_product(normalized[m], normalized[n], grid)));
    }
  }
  return worst;
}

double max_relative_gap(const std::vector<double>& reference, const std::vector<double>& candidate) {
  double peak = 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    peak = std::max(peak, std::abs(reference[i]));
    dot += reference[i] * candidate[i];
  }
  const double sign = dot < 0 ? -1.0 : 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    worst = std::max(worst, std::abs(sign * candidate[i] - reference[i]));
  }
  return peak > 0.0 ? worst / peak : worst;
}

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* ValidationReport::first_failure() const {
  for (const auto& check : checks) {
    if (!check.passed) return &check;
  }
  return nullptr;
}

ValidationReport run_validation(const ModelParams& params, const ValidationOptions& options) {
  ValidationReport report;
  const RadialGrid grid = options.grid ? *options.grid : default_grid(params);
  const RadialGrid residual_grid(grid.x_min(), grid.x_max(), options.residual_points);
  const unsigned n_max = max_bound_states(params);
  const double asymptote = to_double(params.asymptote());

  // Rungs 0..n_max-1 are the ones the telescoped spectrum uses.
  const double shape = max_shape_invariance_residual(params, 0, n_max - 1);
  report.checks.push_back(bounded_check("shape_invariance", shape, 1e-9, "k = 0.." + std::to_string(n_max - 1)));

  const DiscretizedHamiltonian H = build_hamiltonian(params, grid, options.perturbation);
  report.numeric_energies = lowest_eigenvalues(H, n_max + 1);
  const double energy_tolerance = std::max(0.05, 1e-4 * asymptote);
  double energy_gap = 0.0;
  std::string worst_level;
  for (unsigned n = 0; n <= n_max; ++n) {
    report.closed_energies.push_back(to_double(energy(n, params)));
    const double gap = std::abs(report.numeric_energies[n] - report.closed_energies[n]);
    if (gap > energy_gap) {
      energy_gap = gap;
      worst_level = "worst at n = " + std::to_string(n) + ": numeric " + format_value(report.numeric_energies[n]) +
                    " vs closed " + format_value(report.closed_energies[n]);
    }
  }
  report.checks.push_back(bounded_check("energies", energy_gap, energy_tolerance, worst_level));

  const std::size_t below = sturm_count(H, asymptote);
  report.checks.push_back(CheckResult{"bound_state_count", below == n_max + 1, static_cast<double>(below),
                                      static_cast<double>(n_max + 1),
                                      std::to_string(below) + " numeric levels below the asymptote"});

  std::vector<std::vector<double>> samples;
  double worst_residual = 0.0;
  std::size_t node_mismatches = 0;
  std::string node_detail;
  for (unsigned n = 0; n <= n_max; ++n) {
    const HyperbolicForm form = eigenfunction(n, params);
    worst_residual =
        std::max(worst_residual, eigenfunction_residual(form, params, report.closed_energies[n], residual_grid));
    samples.push_back(sample_normalized(form, grid));
    const std::size_t nodes = count_nodes(samples.back());
    if (nodes != n) {
      ++node_mismatches;
      if (node_detail.empty()) node_detail = "n = " + std::to_string(n) + " has " + std::to_string(nodes) + " nodes";
    }
  }
  report.checks.push_back(bounded_check("eigenfunction_residual", worst_residual, 1e-6));
  report.checks.push_back(CheckResult{"node_count", node_mismatches == 0, static_cast<double>(node_mismatches), 0.0,
                                      node_detail});
  report.checks.push_back(bounded_check("orthogonality", max_overlap(samples, grid), 1e-6));
  report.checks.push_back(bounded_check("annihilation", annihilation_residual(params, grid), 1e-5));

  double worst_gap = 0.0;
  for (unsigned n = 0; n <= n_max; ++n) {
    const EigenResult numeric = eigenvector_for(H, report.numeric_energies[n], n);
    worst_gap = std::max(worst_gap, max_relative_gap(samples[n], numeric.eigenvector));
  }
  report.checks.push_back(bounded_check("wavefunction_agreement", worst_gap, 1e-3));

  report.minimum = find_minimum(params);
  const auto& m = report.minimum;
  const bool minimum_ok = m.V_min < 0.0 && m.derivative_residual <= 1e-8 * m.derivative_scale;
  report.checks.push_back(CheckResult{
      "minimum", minimum_ok, m.V_min, 0.0,
      "x0 = " + format_value(m.x0) + ", |P(e^{p x0})| = " + format_value(m.probe_exp_px0) + ", |P(e^{x0})| = " +
          format_value(m.probe_exp_x0) + ", coefficient norm " + format_value(m.coefficient_norm)});
  return report;
}

}  // namespace susy
