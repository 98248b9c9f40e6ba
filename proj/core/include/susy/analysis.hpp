#pragma once

#include <array>
#include <cstddef>

#include "susy/params.hpp"

namespace susy {

/// Coefficients c_j of t^{2j}, j = 0..10, of the even degree-20 polynomial
/// whose positive root t locates the potential minimum. The vector is
/// palindromic: c_j == c_{10-j}.
template <typename T>
std::array<T, 11> min_polynomial_coefficients(const T& B, const T& p) {
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T BB = B * B;
  const T c0 = BB * p + 2 * B * p2;
  const T c1 = -2 * BB * p - B * p2;
  const T c2 = 9 * BB * p + 36 * B * p2 + 27 * p3;
  const T c3 = -36 * BB * p - 114 * B * p2 - 81 * p3;
  const T c4 = 42 * BB * p + 126 * B * p2 + 81 * p3;
  const T c5 = -36 * BB * p - 90 * B * p2 - 54 * p3;
  return {c0, c1, c2, c3, c4, c5, c4, c3, c2, c1, c0};
}

/// Horner evaluation of the degree-20 polynomial at t.
template <typename T>
T min_polynomial(const T& t, const T& B, const T& p) {
  const auto c = min_polynomial_coefficients(B, p);
  const T t2 = t * t;
  T acc = c[10];
  for (std::size_t j = 10; j-- > 0;) acc = acc * t2 + c[j];
  return acc;
}

double min_polynomial(double t, double B, double p);

struct MinimumReport {
  double x0 = 0.0;
  double V_min = 0.0;
  double derivative_residual = 0.0;  // |V'(x0)|
  double derivative_scale = 0.0;     // (2B + 3p)^2 p
  double probe_exp_px0 = 0.0;        // |P(e^{p x0})|
  double probe_exp_x0 = 0.0;         // |P(e^{x0})|, may be +inf
  double coefficient_norm = 0.0;     // Euclidean norm of the eleven coefficients
  std::size_t probe_root_count = 0;  // sign changes of P(e^{px}) over the scan range
};

/// Locates the well by a geometric scan of V' on [1e-3/p, 50/p] followed by
/// bisection. Throws ConvergenceError when no sign change is found.
MinimumReport find_minimum(const ModelParams& params);

struct WellCharacteristics {
  double x0 = 0.0;
  double V_min = 0.0;
  double asymptote = 0.0;
  double depth = 0.0;        // asymptote - V_min
  double half_level = 0.0;   // V_min + depth / 2
  double left = 0.0;
  double right = 0.0;
  double width = 0.0;        // right - left at half_level
  unsigned n_max = 0;
};

WellCharacteristics well_characteristics(const ModelParams& params);

}  // namespace susy
