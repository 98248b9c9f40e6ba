#pragma once

#include <cstddef>
#include <vector>

#include "susy/params.hpp"

namespace susy {

/// Exact form cosh(3px)^sigma * sinh(px)^tau * sum_k coeffs[k] cosh(2kpx).
///
/// Coefficients are canonical: trailing zeros are trimmed, so coeffs.back()
/// is nonzero. `nominal_length` keeps the series length the recursion
/// produced (2n + 1 for the n-th eigenfunction) independent of trimming.
struct HyperbolicForm {
  Rational sigma;
  Rational tau;
  Rational p;
  std::vector<Rational> coeffs;
  std::size_t nominal_length = 1;

  std::size_t top_index() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// e^{-int W} for the rung: sigma = -A_k/(3p), tau = B_k/p, P = 1.
HyperbolicForm ground_form(const LadderParams& a, const Rational& p);

/// Exact (-d/dx + W(x, a_target)) applied to `form`. Returns the family
/// member (sigma - 1, tau - 1, Q). Throws DomainError if tau - 1 <= 0.
HyperbolicForm apply_creation(const HyperbolicForm& form, const LadderParams& a_target, const Rational& p);

/// A^+(a_0) ... A^+(a_{n-1}) applied to ground_form(a_n), for any n.
HyperbolicForm creation_chain(unsigned n, const ModelParams& params);

/// Unnormalized n-th eigenfunction; throws IndexError past max_bound_states.
HyperbolicForm eigenfunction(unsigned n, const ModelParams& params);

/// Large-x growth rate 3p sigma + p tau + 2p * top_index. Negative means
/// square integrable at infinity.
Rational decay_exponent(const HyperbolicForm& form);

/// value = mantissa * exp(log_scale)
struct ScaledValue {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double value() const;
};

/// psi, psi', psi'' sharing one exponential scale.
struct ScaledDerivatives {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
  double log_scale = 0.0;
};

/// Double-precision evaluator for a HyperbolicForm. Dominant exponentials
/// are factored into log_scale, so no evaluation overflows for finite x > 0.
class FormEvaluator {
 public:
  explicit FormEvaluator(const HyperbolicForm& form);

  ScaledValue scaled(double x) const;
  ScaledDerivatives derivatives(double x) const;
  double operator()(double x) const { return scaled(x).value(); }
  /// psi'/psi
  double log_derivative(double x) const;

 private:
  // P, P', P'' divided by exp(2 K p x).
  void series(double x, double& value, double& first, double& second) const;
  double log_prefactor(double x) const;
  // d/dx log(prefactor) and its derivative.
  void prefactor_log_derivatives(double x, double& g, double& g_prime) const;

  double sigma_;
  double tau_;
  double p_;
  std::vector<double> coeffs_;
};

double evaluate(const HyperbolicForm& form, double x);
ScaledValue evaluate_scaled(const HyperbolicForm& form, double x);
double evaluate_log_derivative(const HyperbolicForm& form, double x);

}  // namespace susy
