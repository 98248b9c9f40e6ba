#pragma once

#include <vector>

#include "susy/params.hpp"

namespace susy {

struct Level {
  unsigned n = 0;
  Rational energy;
};

/// Closed-form bound states 0..n_max below the asymptote (2B + 3p)^2.
struct Spectrum {
  ModelParams params;
  std::vector<Level> levels;
  unsigned n_max = 0;
  Rational asymptote;
};

/// (2B + 3p)/(4p). Normalizable levels satisfy n < this value.
Rational normalizability_bound(const ModelParams& params);
/// (2B + 5p)/(4p), the weaker count bound implied by E_{n-1} < E_n alone.
Rational energy_monotonicity_bound(const ModelParams& params);

/// Largest n with a normalizable eigenfunction: floor(r), or floor(r) - 1
/// when r = (2B + 3p)/(4p) is an integer. Integer detection is exact.
unsigned max_bound_states(const ModelParams& params);

/// 8np(2B + 3p - 2np), evaluated for any n without range checking.
Rational raw_energy_formula(unsigned n, const ModelParams& params);

/// Closed-form E_n; throws IndexError for n > max_bound_states.
Rational energy(unsigned n, const ModelParams& params);

/// Sum of C(a_k) for k < n.
Rational telescoped_energy(unsigned n, const ModelParams& params);

/// Builds levels by both routes and throws std::logic_error if they differ.
Spectrum full_spectrum(const ModelParams& params);

}  // namespace susy
