#include "susy/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace susy {

namespace {

using nlohmann::ordered_json;

// Rounded to twelve significant digits so the dump is stable and short.
ordered_json number(double value) {
  if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  return std::stod(format_number(value));
}

ordered_json integer(const boost::multiprecision::cpp_int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

ordered_json fraction(const Rational& value) {
  return ordered_json::array(
      {integer(boost::multiprecision::numerator(value)), integer(boost::multiprecision::denominator(value))});
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string spectrum_json(const Spectrum& spectrum) {
  const ModelParams& params = spectrum.params;
  ordered_json out;
  out["B"] = number(params.B_value());
  out["p"] = number(params.p_value());
  out["A"] = number(params.A_value());
  out["B_exact"] = to_string(params.B());
  out["p_exact"] = to_string(params.p());
  out["A_exact"] = to_string(params.A());
  out["n_max"] = spectrum.n_max;
  out["asymptote"] = number(to_double(spectrum.asymptote));
  out["asymptote_exact"] = to_string(spectrum.asymptote);
  ordered_json levels = ordered_json::array();
  for (const Level& level : spectrum.levels) {
    levels.push_back({{"n", level.n}, {"E", number(to_double(level.energy))}, {"E_exact", to_string(level.energy)}});
  }
  out["levels"] = std::move(levels);
  return out.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum& spectrum) {
  std::ostringstream out;
  out << "n,E\n";
  for (const Level& level : spectrum.levels) out << level.n << ',' << format_number(to_double(level.energy)) << '\n';
  return out.str();
}

std::string form_json(const HyperbolicForm& form) {
  ordered_json out;
  out["sigma"] = fraction(form.sigma);
  out["tau"] = fraction(form.tau);
  out["p"] = fraction(form.p);
  ordered_json coeffs = ordered_json::array();
  ordered_json decimals = ordered_json::array();
  for (const Rational& c : form.coeffs) {
    coeffs.push_back(fraction(c));
    decimals.push_back(number(to_double(c)));
  }
  out["coeffs"] = std::move(coeffs);
  out["coeffs_decimal"] = std::move(decimals);
  out["sigma_exact"] = to_string(form.sigma);
  out["tau_exact"] = to_string(form.tau);
  out["nominal_length"] = form.nominal_length;
  out["decay_exponent"] = number(to_double(decay_exponent(form)));
  return out.dump(2) + "\n";
}

std::string minimum_json(const MinimumReport& report) {
  ordered_json out;
  out["x0"] = number(report.x0);
  out["V_min"] = number(report.V_min);
  out["derivative_residual"] = number(report.derivative_residual);
  out["derivative_scale"] = number(report.derivative_scale);
  out["poly_root_probe"] = {{"t_exp_p_x0", number(report.probe_exp_px0)},
                            {"t_exp_x0", number(report.probe_exp_x0)},
                            {"coefficient_norm", number(report.coefficient_norm)},
                            {"sign_changes_on_scan", report.probe_root_count}};
  return out.dump(2) + "\n";
}

std::string validation_json(const ValidationReport& report) {
  ordered_json out;
  out["passed"] = report.passed();
  ordered_json checks = ordered_json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"passed", check.passed},
                      {"measured", number(check.measured)},
                      {"threshold", number(check.threshold)},
                      {"detail", check.detail}});
  }
  out["checks"] = std::move(checks);
  ordered_json energies = ordered_json::array();
  for (std::size_t n = 0; n < report.closed_energies.size(); ++n) {
    energies.push_back({{"n", n},
                        {"closed", number(report.closed_energies[n])},
                        {"numeric", number(report.numeric_energies[n])}});
  }
  out["energies"] = std::move(energies);
  return out.dump(2) + "\n";
}

}  // namespace susy
