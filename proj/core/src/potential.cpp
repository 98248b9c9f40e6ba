#include "susy/potential.hpp"

#include <cmath>
#include <string>

namespace susy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double x) {
  if (!(x > 0.0)) throw DomainError("x must be positive, got " + std::to_string(x));
}

bool singular(double x, double p) { return p * x < kSingularCutoff; }
bool asymptotic(double x, double p) { return p * x > kAsymptoticCutoff; }

}  // namespace

Rung rung(const LadderParams& a, const Rational& p) { return Rung{to_double(a.A), to_double(a.B), to_double(p)}; }

Rung rung(const ModelParams& params, unsigned k) { return rung(ladder(params, k), params.p()); }

double sech2(double y) {
  const double e = std::exp(-2.0 * std::abs(y));
  const double d = 1.0 + e;
  return 4.0 * e / (d * d);
}

double csch2(double y) {
  if (std::abs(y) < 1.0) {
    const double s = std::sinh(y);
    return 1.0 / (s * s);
  }
  const double e = std::exp(-2.0 * std::abs(y));
  const double d = 1.0 - e;
  return 4.0 * e / (d * d);
}

double coth(double y) { return 1.0 / std::tanh(y); }

double superpotential(double x, const Rung& r) {
  require_positive(x);
  if (singular(x, r.p)) return -kInf;
  if (asymptotic(x, r.p)) return r.A - r.B;
  return r.A * std::tanh(3.0 * r.p * x) - r.B * coth(r.p * x);
}

double superpotential_derivative(double x, const Rung& r) {
  require_positive(x);
  if (singular(x, r.p)) return kInf;
  if (asymptotic(x, r.p)) return 0.0;
  return 3.0 * r.p * r.A * sech2(3.0 * r.p * x) + r.p * r.B * csch2(r.p * x);
}

double superpotential_second_derivative(double x, const Rung& r) {
  require_positive(x);
  if (singular(x, r.p)) return -kInf;
  if (asymptotic(x, r.p)) return 0.0;
  const double y1 = r.p * x;
  const double y3 = 3.0 * y1;
  return -18.0 * r.p * r.p * r.A * sech2(y3) * std::tanh(y3) - 2.0 * r.p * r.p * r.B * csch2(y1) * coth(y1);
}

double partner_minus(double x, const Rung& r) {
  require_positive(x);
  if (singular(x, r.p)) return kInf;
  const double w = superpotential(x, r);
  return w * w - superpotential_derivative(x, r);
}

double partner_plus(double x, const Rung& r) {
  require_positive(x);
  if (singular(x, r.p)) return kInf;
  const double w = superpotential(x, r);
  return w * w + superpotential_derivative(x, r);
}

double potential_closed_form(double x, const ModelParams& params) {
  require_positive(x);
  const double B = params.B_value();
  const double p = params.p_value();
  if (singular(x, p)) return kInf;
  if (asymptotic(x, p)) {
    const double gap = 2.0 * B + 3.0 * p;
    return gap * gap;
  }
  const double y = p * x;
  const double inner = B * coth(y) - 3.0 * (B + p) * std::tanh(3.0 * y);
  return -B * p * csch2(y) - 9.0 * p * (B + p) * sech2(3.0 * y) + inner * inner;
}

double potential_derivative(double x, const ModelParams& params) {
  require_positive(x);
  const double B = params.B_value();
  const double p = params.p_value();
  if (singular(x, p)) return -kInf;
  if (asymptotic(x, p)) return 0.0;
  const double y = p * x;
  const double y3 = 3.0 * y;
  const double A = 3.0 * (B + p);
  const double inner = B * coth(y) - A * std::tanh(y3);
  const double inner_prime = -B * p * csch2(y) - 3.0 * p * A * sech2(y3);
  // d/dx csch^2(y) = -2p csch^2 coth,  d/dx sech^2(3y) = -6p sech^2 tanh
  return 2.0 * B * p * p * csch2(y) * coth(y) + 54.0 * p * p * (B + p) * sech2(y3) * std::tanh(y3) +
         2.0 * inner * inner_prime;
}

double shape_invariance_residual(double x, const ModelParams& params, unsigned k) {
  return shape_invariance_residual(x, params, k, to_double(shift_constant(params, k)));
}

double shape_invariance_residual(double x, const ModelParams& params, unsigned k, double shift) {
  require_positive(x);
  if (singular(x, params.p_value())) return kInf;
  return partner_plus(x, rung(params, k)) - partner_minus(x, rung(params, k + 1)) - shift;
}

}  // namespace susy
