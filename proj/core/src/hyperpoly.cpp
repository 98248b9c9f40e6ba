#include "susy/hyperpoly.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "susy/potential.hpp"
#include "susy/spectrum.hpp"

namespace susy {

namespace {

void trim(std::vector<Rational>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

void require_positive(double x) {
  if (!(x > 0.0)) throw DomainError("x must be positive, got " + std::to_string(x));
}

double log_cosh(double z) { return z + std::log1p(std::exp(-2.0 * z)) - std::numbers::ln2; }

double log_sinh(double z) {
  if (z < 1.0) return std::log(std::sinh(z));
  return z + std::log1p(-std::exp(-2.0 * z)) - std::numbers::ln2;
}

// Adds `scale * cosh(2jpx) * cosh(2kpx)` into the cosh basis.
void add_cosh_cosh(std::vector<Rational>& out, std::size_t j, std::size_t k, const Rational& scale) {
  const Rational half = scale / 2;
  out[j + k] += half;
  out[j > k ? j - k : k - j] += half;
}

// Adds `scale * sinh(2jpx) * sinh(2kpx)` into the cosh basis.
void add_sinh_sinh(std::vector<Rational>& out, std::size_t j, std::size_t k, const Rational& scale) {
  const Rational half = scale / 2;
  out[j + k] += half;
  out[j > k ? j - k : k - j] -= half;
}

}  // namespace

HyperbolicForm ground_form(const LadderParams& a, const Rational& p) {
  return HyperbolicForm{-a.A / (3 * p), a.B / p, p, {Rational(1)}, 1};
}

HyperbolicForm apply_creation(const HyperbolicForm& form, const LadderParams& a_target, const Rational& p) {
  const Rational tau_out = form.tau - 1;
  if (tau_out <= 0) {
    throw DomainError("creation step would give sinh exponent " + to_string(tau_out) +
                      " <= 0; the form is not regular at the origin");
  }
  // Q = a S31 P - b C31 P - C3S1 P' with S31 = (c2 - c1)/2, C31 = (c2 + c1)/2,
  // C3S1 = (s2 - s1)/2 and P' = sum 2kp alpha_k s_k.
  const Rational a = a_target.A - 3 * p * form.sigma;
  const Rational b = a_target.B + p * form.tau;
  const Rational c2_weight = (a - b) / 2;
  const Rational c1_weight = -(a + b) / 2;

  std::vector<Rational> out(form.coeffs.size() + 2, Rational(0));
  for (std::size_t k = 0; k < form.coeffs.size(); ++k) {
    const Rational& alpha = form.coeffs[k];
    if (alpha == 0) continue;
    add_cosh_cosh(out, 2, k, c2_weight * alpha);
    add_cosh_cosh(out, 1, k, c1_weight * alpha);
    if (k == 0) continue;
    const Rational derivative_weight = k * p * alpha;  // (1/2) * 2kp * alpha_k
    add_sinh_sinh(out, 2, k, -derivative_weight);
    add_sinh_sinh(out, 1, k, derivative_weight);
  }
  trim(out);
  return HyperbolicForm{form.sigma - 1, tau_out, p, std::move(out), form.nominal_length + 2};
}

HyperbolicForm creation_chain(unsigned n, const ModelParams& params) {
  HyperbolicForm form = ground_form(ladder(params, n), params.p());
  for (unsigned k = n; k-- > 0;) form = apply_creation(form, ladder(params, k), params.p());
  return form;
}

HyperbolicForm eigenfunction(unsigned n, const ModelParams& params) {
  const unsigned n_max = max_bound_states(params);
  if (n > n_max) {
    throw IndexError("eigenfunction " + std::to_string(n) + " is not normalizable (n_max = " +
                     std::to_string(n_max) + ")");
  }
  return creation_chain(n, params);
}

Rational decay_exponent(const HyperbolicForm& form) {
  return 3 * form.p * form.sigma + form.p * form.tau + 2 * form.p * static_cast<unsigned>(form.top_index());
}

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

FormEvaluator::FormEvaluator(const HyperbolicForm& form)
    : sigma_(to_double(form.sigma)), tau_(to_double(form.tau)), p_(to_double(form.p)) {
  coeffs_.reserve(form.coeffs.size());
  for (const auto& c : form.coeffs) coeffs_.push_back(to_double(c));
}

void FormEvaluator::series(double x, double& value, double& first, double& second) const {
  const double y = p_ * x;
  const auto top = static_cast<double>(coeffs_.size() - 1);
  value = first = second = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double grow = std::exp(2.0 * (kk - top) * y);
    const double shrink = std::exp(-2.0 * (kk + top) * y);
    const double c = 0.5 * (grow + shrink);
    const double s = 0.5 * (grow - shrink);
    const double omega = 2.0 * kk * p_;
    value += coeffs_[k] * c;
    first += coeffs_[k] * omega * s;
    second += coeffs_[k] * omega * omega * c;
  }
}

double FormEvaluator::log_prefactor(double x) const {
  const double y = p_ * x;
  return sigma_ * log_cosh(3.0 * y) + tau_ * log_sinh(y);
}

void FormEvaluator::prefactor_log_derivatives(double x, double& g, double& g_prime) const {
  const double y = p_ * x;
  g = 3.0 * p_ * sigma_ * std::tanh(3.0 * y) + p_ * tau_ * coth(y);
  g_prime = 9.0 * p_ * p_ * sigma_ * sech2(3.0 * y) - p_ * p_ * tau_ * csch2(y);
}

ScaledValue FormEvaluator::scaled(double x) const {
  require_positive(x);
  double value = 0.0, first = 0.0, second = 0.0;
  series(x, value, first, second);
  const double top = static_cast<double>(coeffs_.size() - 1);
  return ScaledValue{value, log_prefactor(x) + 2.0 * top * p_ * x};
}

ScaledDerivatives FormEvaluator::derivatives(double x) const {
  require_positive(x);
  double P = 0.0, dP = 0.0, d2P = 0.0;
  series(x, P, dP, d2P);
  double g = 0.0, g_prime = 0.0;
  prefactor_log_derivatives(x, g, g_prime);
  const double top = static_cast<double>(coeffs_.size() - 1);
  ScaledDerivatives out;
  out.value = P;
  out.first = g * P + dP;
  out.second = (g_prime + g * g) * P + 2.0 * g * dP + d2P;
  out.log_scale = log_prefactor(x) + 2.0 * top * p_ * x;
  return out;
}

double FormEvaluator::log_derivative(double x) const {
  const ScaledDerivatives d = derivatives(x);
  return d.first / d.value;
}

double evaluate(const HyperbolicForm& form, double x) { return FormEvaluator(form)(x); }

ScaledValue evaluate_scaled(const HyperbolicForm& form, double x) { return FormEvaluator(form).scaled(x); }

double evaluate_log_derivative(const HyperbolicForm& form, double x) {
  return FormEvaluator(form).log_derivative(x);
}

}  // namespace susy
