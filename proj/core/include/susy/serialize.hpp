#pragma once

#include <string>

#include "susy/analysis.hpp"
#include "susy/hyperpoly.hpp"
#include "susy/spectrum.hpp"
#include "susy/validation.hpp"

namespace susy {

/// Twelve significant digits, shortest form ("240.25", "-15", "1e-09").
std::string format_number(double value);

/// {B, p, A, n_max, asymptote, levels: [{n, E}]} with *_exact companions.
std::string spectrum_json(const Spectrum& spectrum);
/// Header "n,E" then one row per level.
std::string spectrum_csv(const Spectrum& spectrum);

/// {sigma, tau, p, coeffs: [[num, den], ...]} plus decimal renderings.
std::string form_json(const HyperbolicForm& form);

std::string minimum_json(const MinimumReport& report);

std::string validation_json(const ValidationReport& report);

}  // namespace susy
