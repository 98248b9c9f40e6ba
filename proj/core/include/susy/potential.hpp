#pragma once

#include <limits>

#include "susy/params.hpp"

namespace susy {

/// Floating-point coefficients of one superpotential W = A tanh(3px) - B coth(px).
struct Rung {
  double A = 0.0;
  double B = 0.0;
  double p = 0.0;
};

Rung rung(const LadderParams& a, const Rational& p);
Rung rung(const ModelParams& params, unsigned k);

/// Below this value of px every function here returns an infinite sentinel
/// instead of evaluating the 1/x^2 wall.
inline constexpr double kSingularCutoff = 1e-8;
/// Above this value of px the exact large-x limits are returned.
inline constexpr double kAsymptoticCutoff = 350.0;

/// True for the sentinel returned inside the px < kSingularCutoff region.
inline bool is_singular_sentinel(double value) { return value == std::numeric_limits<double>::infinity() ||
                                                        value == -std::numeric_limits<double>::infinity(); }

// Stable hyperbolic pieces; no overflow for any finite y > 0.
double sech2(double y);
double csch2(double y);
double coth(double y);

double superpotential(double x, const Rung& r);
double superpotential_derivative(double x, const Rung& r);
double superpotential_second_derivative(double x, const Rung& r);

/// W^2 - W'
double partner_minus(double x, const Rung& r);
/// W^2 + W'
double partner_plus(double x, const Rung& r);

/// -Bp csch^2(px) - 9p(B+p) sech^2(3px) + (B coth(px) - 3(B+p) tanh(3px))^2
double potential_closed_form(double x, const ModelParams& params);
/// Analytic x-derivative of potential_closed_form.
double potential_derivative(double x, const ModelParams& params);

/// V_+(x, a_k) - V_-(x, a_{k+1}) - C(a_k); vanishes identically only where
/// the ladder is shape invariant.
double shape_invariance_residual(double x, const ModelParams& params, unsigned k);
/// Same with an explicit shift in place of C(a_k).
double shape_invariance_residual(double x, const ModelParams& params, unsigned k, double shift);

}  // namespace susy
