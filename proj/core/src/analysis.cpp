#include "susy/analysis.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "susy/potential.hpp"
#include "susy/spectrum.hpp"

namespace susy {

namespace {

constexpr std::size_t kScanSteps = 400;

std::vector<double> geometric_scan(double lo, double hi, std::size_t steps) {
  std::vector<double> xs(steps + 1);
  const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(steps));
  double x = lo;
  for (std::size_t i = 0; i <= steps; ++i, x *= ratio) xs[i] = x;
  xs.back() = hi;
  return xs;
}

// Root of f on [lo, hi] where f(lo) and f(hi) have opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  double f_lo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double f_mid = f(mid);
    if (std::abs(f_mid) <= tolerance) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// P(e^{px}) e^{-10px}; the palindrome turns it into a cosine-like sum.
double reduced_polynomial(double x, const std::array<double, 11>& c, double p) {
  double sum = c[5];
  for (std::size_t j = 0; j < 5; ++j) sum += 2.0 * c[j] * std::cosh((10.0 - 2.0 * static_cast<double>(j)) * p * x);
  return sum;
}

}  // namespace

double min_polynomial(double t, double B, double p) { return min_polynomial<double>(t, B, p); }

MinimumReport find_minimum(const ModelParams& params) {
  const double B = params.B_value();
  const double p = params.p_value();
  const double gap = 2.0 * B + 3.0 * p;
  const double scale = gap * gap * p;
  const auto dV = [&params](double x) { return potential_derivative(x, params); };

  const std::vector<double> xs = geometric_scan(1e-3 / p, 50.0 / p, kScanSteps);
  double best_x = std::numeric_limits<double>::quiet_NaN();
  double best_V = std::numeric_limits<double>::infinity();
  double previous = dV(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double current = dV(xs[i]);
    if (previous < 0.0 && current >= 0.0) {
      const double x = bisect(dV, xs[i - 1], xs[i], 1e-10 * scale);
      const double v = potential_closed_form(x, params);
      if (v < best_V) {
        best_V = v;
        best_x = x;
      }
    }
    previous = current;
  }
  if (!std::isfinite(best_x)) {
    throw ConvergenceError("no sign change of V' found on [1e-3/p, 50/p]");
  }

  MinimumReport report;
  report.x0 = best_x;
  report.V_min = best_V;
  report.derivative_residual = std::abs(dV(best_x));
  report.derivative_scale = scale;

  const auto c = min_polynomial_coefficients<double>(B, p);
  double norm2 = 0.0;
  for (double v : c) norm2 += v * v;
  report.coefficient_norm = std::sqrt(norm2);
  report.probe_exp_px0 = std::abs(min_polynomial(std::exp(p * best_x), B, p));
  report.probe_exp_x0 = std::abs(min_polynomial(std::exp(best_x), B, p));

  double last = reduced_polynomial(xs[0], c, p);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double here = reduced_polynomial(xs[i], c, p);
    if (std::isfinite(here) && std::isfinite(last) && (here < 0) != (last < 0)) ++report.probe_root_count;
    last = here;
  }
  return report;
}

WellCharacteristics well_characteristics(const ModelParams& params) {
  const MinimumReport minimum = find_minimum(params);
  WellCharacteristics well;
  well.x0 = minimum.x0;
  well.V_min = minimum.V_min;
  well.asymptote = to_double(params.asymptote());
  well.depth = well.asymptote - well.V_min;
  well.half_level = well.V_min + 0.5 * well.depth;
  well.n_max = max_bound_states(params);

  const auto above = [&](double x) { return potential_closed_form(x, params) - well.half_level; };
  const double tolerance = 1e-12 * well.depth;

  double lo = well.x0;
  while (above(lo) <= 0.0) lo *= 0.5;
  well.left = bisect(above, lo, well.x0, tolerance);

  double hi = well.x0;
  const double limit = 1e3 / params.p_value();
  while (above(hi) <= 0.0) {
    hi *= 1.25;
    if (hi > limit) throw ConvergenceError("potential never rises back above half depth");
  }
  well.right = bisect(above, well.x0, hi, tolerance);
  well.width = well.right - well.left;
  return well;
}

}  // namespace susy
