#include "susy/spectrum.hpp"

#include <stdexcept>
#include <string>

namespace susy {

Rational normalizability_bound(const ModelParams& params) {
  return (2 * params.B() + 3 * params.p()) / (4 * params.p());
}

Rational energy_monotonicity_bound(const ModelParams& params) {
  return (2 * params.B() + 5 * params.p()) / (4 * params.p());
}

unsigned max_bound_states(const ModelParams& params) {
  const Rational r = normalizability_bound(params);
  const boost::multiprecision::cpp_int num = boost::multiprecision::numerator(r);
  const boost::multiprecision::cpp_int den = boost::multiprecision::denominator(r);
  boost::multiprecision::cpp_int n_max = num / den;  // r > 0, so truncation is floor
  if (num % den == 0) n_max -= 1;
  return n_max.convert_to<unsigned>();
}

Rational raw_energy_formula(unsigned n, const ModelParams& params) {
  const Rational& B = params.B();
  const Rational& p = params.p();
  return 8 * n * p * (2 * B + 3 * p - 2 * n * p);
}

Rational energy(unsigned n, const ModelParams& params) {
  const unsigned n_max = max_bound_states(params);
  if (n > n_max) {
    throw IndexError("level " + std::to_string(n) + " exceeds n_max = " + std::to_string(n_max) +
                     " (normalizability requires n < (2B+3p)/(4p))");
  }
  return raw_energy_formula(n, params);
}

Rational telescoped_energy(unsigned n, const ModelParams& params) {
  Rational sum = 0;
  for (unsigned k = 0; k < n; ++k) sum += shift_constant(params, k);
  return sum;
}

Spectrum full_spectrum(const ModelParams& params) {
  Spectrum spectrum{params, {}, max_bound_states(params), params.asymptote()};
  spectrum.levels.reserve(spectrum.n_max + 1);
  for (unsigned n = 0; n <= spectrum.n_max; ++n) {
    Rational closed = energy(n, params);
    if (closed != telescoped_energy(n, params)) {
      throw std::logic_error("telescoped and closed-form energies disagree at n = " + std::to_string(n));
    }
    spectrum.levels.push_back(Level{n, std::move(closed)});
  }
  return spectrum;
}

}  // namespace susy
