#include "susy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "susy/spectrum.hpp"

namespace susy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gaussian elimination with partial pivoting for a general tridiagonal
// matrix (the dgttrf/dgtts2 scheme).
class TridiagonalLU {
 public:
  TridiagonalLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> super, double tiny)
      : dl_(std::move(sub)), d_(std::move(diag)), du_(std::move(super)) {
    const std::size_t n = d_.size();
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 1 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    if (n > 0 && d_[n - 1] == 0.0) d_[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      double value = b[i];
      if (i + 1 < n) value -= du_[i] * b[i + 1];
      if (i + 2 < n) value -= du2_[i] * b[i + 2];
      b[i] = value / d_[i];
    }
  }

 private:
  std::vector<double> dl_, d_, du_, du2_;
  std::vector<bool> swapped_;
};

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Bisection for the index-th (zero-based) eigenvalue inside [lo, hi].
double bisect_eigenvalue(const DiscretizedHamiltonian& H, std::size_t index, double lo, double hi, double norm) {
  constexpr int kMaxIterations = 400;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double tol = std::max(1e-14 * norm, 4.0 * kEps * std::max(std::abs(lo), std::abs(hi)));
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    if (sturm_count(H, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw ConvergenceError("Sturm bisection hit the iteration limit for eigenvalue " + std::to_string(index));
}

}  // namespace

RadialGrid::RadialGrid(double x_min, double x_max, std::size_t points)
    : x_min_(x_min), x_max_(x_max), points_(points), h_((x_max - x_min) / static_cast<double>(points + 1)) {
  if (!(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("grid requires 0 < x_min < x_max");
  }
  if (points < kMinPoints) {
    throw std::invalid_argument("grid requires at least " + std::to_string(kMinPoints) + " interior points");
  }
}

std::vector<double> RadialGrid::points() const {
  std::vector<double> xs(points_);
  for (std::size_t i = 0; i < points_; ++i) xs[i] = at(i);
  return xs;
}

RadialGrid default_grid(const ModelParams& params, std::size_t points) {
  const double B = params.B_value();
  const double p = params.p_value();
  // psi ~ (px)^tau at the origin; the Dirichlet cut costs about (p x_min)^(2 tau - 1)
  // in energy and (p x_min)^tau in the sampled amplitude.
  const double tau = B / p;
  const double regular_cut = std::min(std::pow(1e-6, 1.0 / (2.0 * tau - 1.0)), std::pow(1e-5, 1.0 / tau));
  const double x_min = std::max(1e-4, std::min(1e-2, regular_cut)) / p;
  const double slowest_decay = 2.0 * B + 3.0 * p - 4.0 * static_cast<double>(max_bound_states(params)) * p;
  const double x_max = std::clamp(6.0 / slowest_decay, 12.0 / p, 200.0 / p);
  return RadialGrid(x_min, x_max, points);
}

double DiscretizedHamiltonian::norm_bound() const {
  double bound = 0.0;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    bound = std::max(bound, row);
  }
  return bound;
}

std::vector<double> DiscretizedHamiltonian::apply(std::span<const double> v) const {
  const std::size_t n = diag.size();
  if (v.size() != n) throw std::invalid_argument("vector length does not match the Hamiltonian");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double value = diag[i] * v[i];
    if (i > 0) value += offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) value += offdiag[i] * v[i + 1];
    out[i] = value;
  }
  return out;
}

DiscretizedHamiltonian build_hamiltonian(const RadialGrid& grid, const std::function<double(double)>& potential) {
  const double h = grid.spacing();
  const double kinetic = 1.0 / (h * h);
  DiscretizedHamiltonian H{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size() - 1, -kinetic)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = potential(grid.at(i));
    if (!std::isfinite(v)) {
      throw ConvergenceError("potential is not finite at x = " + std::to_string(grid.at(i)) +
                             "; raise x_min");
    }
    H.diag[i] = 2.0 * kinetic + v;
  }
  return H;
}

DiscretizedHamiltonian build_hamiltonian(const ModelParams& params, const RadialGrid& grid, double perturbation) {
  return build_hamiltonian(grid, [&params, perturbation](double x) {
    return (1.0 + perturbation) * potential_closed_form(x, params);
  });
}

std::size_t sturm_count(const DiscretizedHamiltonian& H, double shift) {
  const std::size_t n = H.size();
  double largest_coupling = 1.0;
  for (double e : H.offdiag) largest_coupling = std::max(largest_coupling, e * e);
  const double pivmin = std::numeric_limits<double>::min() * largest_coupling;
  std::size_t count = 0;
  double q = H.diag[0] - shift;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = H.offdiag[i - 1];
    q = H.diag[i] - shift - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const DiscretizedHamiltonian& H, std::size_t m) {
  if (m < 1 || m > H.size()) throw std::invalid_argument("requested eigenvalue count out of range");
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  const std::size_t n = H.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(H.offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(H.offdiag[i]);
    lo = std::min(lo, H.diag[i] - radius);
    hi = std::max(hi, H.diag[i] + radius);
  }
  const double norm = H.norm_bound();
  lo -= kEps * norm;
  hi += kEps * norm;
  std::vector<double> values(m);
  for (std::size_t j = 0; j < m; ++j) values[j] = bisect_eigenvalue(H, j, lo, hi, norm);
  return values;
}

std::vector<double> eigenvalues_below(const DiscretizedHamiltonian& H, double threshold, std::size_t limit) {
  const std::size_t count = std::min(sturm_count(H, threshold), limit);
  if (count == 0) return {};
  return lowest_eigenvalues(H, count);
}

EigenResult eigenvector_for(const DiscretizedHamiltonian& H, double eigenvalue, std::size_t index) {
  const std::size_t n = H.size();
  const double norm = H.norm_bound();
  std::vector<double> diag(H.diag);
  for (double& d : diag) d -= eigenvalue;
  const TridiagonalLU lu(H.offdiag, std::move(diag), H.offdiag, kEps * norm);

  std::vector<double> v(n, 1.0);
  double lambda = eigenvalue;
  double residual = std::numeric_limits<double>::infinity();
  constexpr int kMaxIterations = 8;
  for (int it = 0; it < kMaxIterations; ++it) {
    lu.solve(v);
    const double scale = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (!(scale > 0.0) || !std::isfinite(scale)) throw ConvergenceError("inverse iteration broke down");
    for (double& x : v) x /= scale;
    const std::vector<double> Hv = H.apply(v);
    lambda = std::inner_product(v.begin(), v.end(), Hv.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += (Hv[i] - lambda * v[i]) * (Hv[i] - lambda * v[i]);
    residual = std::sqrt(r2);
    if (it >= 1 && residual <= 1e-10 * norm) break;
  }
  if (residual > 1e-8 * norm) {
    throw ConvergenceError("inverse iteration residual " + std::to_string(residual) + " above 1e-8 * ||H||");
  }

  const double peak = max_abs(v);
  for (double x : v) {
    if (std::abs(x) > 1e-3 * peak) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      break;
    }
  }
  const double l2 = l2_norm(v, H.grid);
  for (double& x : v) x /= l2;
  const std::size_t nodes = count_nodes(v);
  return EigenResult{index, lambda, std::move(v), nodes, residual};
}

std::vector<double> derivative_numeric(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw std::invalid_argument("five-point stencil needs at least five samples");
  std::vector<double> d(n);
  const double s = 1.0 / (12.0 * h);
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
  for (std::size_t i = 2; i + 2 < n; ++i) d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * s;
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * s;
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * s;
  return d;
}

std::vector<double> apply_ladder_numeric(const ModelParams& params, unsigned k, LadderSign sign,
                                         std::span<const double> values, const RadialGrid& grid) {
  if (values.size() != grid.size()) throw std::invalid_argument("values do not match the grid");
  const Rung r = rung(params, k);
  std::vector<double> out = derivative_numeric(values, grid.spacing());
  const double direction = sign == LadderSign::Creation ? -1.0 : 1.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = direction * out[i] + superpotential(grid.at(i), r) * values[i];
  }
  return out;
}

std::vector<double> apply_schrodinger_numeric(const RadialGrid& grid, std::span<const double> f,
                                              const std::function<double(double)>& potential) {
  if (f.size() != grid.size()) throw std::invalid_argument("values do not match the grid");
  const std::size_t n = f.size();
  const double h = grid.spacing();
  const double s = 1.0 / (12.0 * h * h);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double second = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * s;
    out[i] = -second + potential(grid.at(i)) * f[i];
  }
  return out;
}

double inner_product(std::span<const double> a, std::span<const double> b, const RadialGrid& grid) {
  if (a.size() != grid.size() || b.size() != grid.size()) {
    throw std::invalid_argument("values do not match the grid");
  }
  const std::size_t n = a.size();
  double sum = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
  sum -= 0.5 * (a[0] * b[0] + a[n - 1] * b[n - 1]);
  return sum * grid.spacing();
}

double l2_norm(std::span<const double> values, const RadialGrid& grid) {
  return std::sqrt(inner_product(values, values, grid));
}

std::size_t count_nodes(std::span<const double> values) {
  const double floor = 1e-12 * max_abs(values);
  std::size_t nodes = 0;
  int last_sign = 0;
  for (double v : values) {
    if (std::abs(v) <= floor) continue;
    const int sign = v > 0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

std::vector<double> sample_normalized(const HyperbolicForm& form, const RadialGrid& grid) {
  const FormEvaluator psi(form);
  std::vector<ScaledValue> raw(grid.size());
  double top = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    raw[i] = psi.scaled(grid.at(i));
    if (raw[i].mantissa != 0.0) top = std::max(top, raw[i].log_scale + std::log(std::abs(raw[i].mantissa)));
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = raw[i].mantissa * std::exp(raw[i].log_scale - top);
  const double norm = l2_norm(values, grid);
  for (double& v : values) v /= norm;
  return values;
}

}  // namespace susy
