#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "susy/analysis.hpp"
#include "susy/hyperpoly.hpp"
#include "susy/oracle.hpp"
#include "susy/potential.hpp"
#include "susy/serialize.hpp"
#include "susy/spectrum.hpp"
#include "susy/validation.hpp"

namespace susy::cli {

namespace {

enum class Format { Json, Csv };

struct RunConfig {
  std::string B_text;
  std::string p_text;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<std::size_t> grid_points;
  std::optional<std::string> format;
  std::string out_path;
  double perturbation = 0.0;
  unsigned level = 0;
  std::size_t samples = 400;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ModelParams parse_params(const RunConfig& config) {
  Rational B, p;
  try {
    B = parse_rational(config.B_text);
    p = parse_rational(config.p_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid number: ") + e.what());
  }
  return make_params(B, p);
}

Format format_of(const RunConfig& config, Format fallback) {
  if (!config.format) return fallback;
  return *config.format == "csv" ? Format::Csv : Format::Json;
}

RadialGrid grid_of(const RunConfig& config, const ModelParams& params) {
  const RadialGrid base = default_grid(params);
  try {
    return RadialGrid(config.x_min.value_or(base.x_min()), config.x_max.value_or(base.x_max()),
                      config.grid_points.value_or(base.size()));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Writes `text` to --out, to $SUSY_OUTPUT_DIR/<name>, or to `out`.
void emit(const RunConfig& config, const std::string& name, const std::string& text, std::ostream& out) {
  std::filesystem::path target;
  if (!config.out_path.empty()) {
    target = config.out_path;
  } else if (const char* dir = std::getenv(kOutputDirVariable); dir != nullptr && *dir != '\0') {
    target = std::filesystem::path(dir) / name;
  } else {
    out << text;
    return;
  }
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream file(target, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + target.string());
  file << text;
}

std::string extension(Format format) { return format == Format::Csv ? ".csv" : ".json"; }

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  const ModelParams params = parse_params(config);
  const Spectrum spectrum = full_spectrum(params);
  const Format format = format_of(config, Format::Json);
  emit(config, "spectrum" + extension(format), format == Format::Csv ? spectrum_csv(spectrum) : spectrum_json(spectrum),
       out);
  return kSuccess;
}

int cmd_eigenfunction(const RunConfig& config, std::ostream& out) {
  const ModelParams params = parse_params(config);
  const HyperbolicForm form = eigenfunction(config.level, params);
  const RadialGrid grid = grid_of(config, params);
  const RadialGrid table(grid.x_min(), grid.x_max(), std::max(config.samples, RadialGrid::kMinPoints));
  const std::vector<double> psi = sample_normalized(form, table);
  const Format format = format_of(config, Format::Json);

  std::string text;
  if (format == Format::Csv) {
    std::ostringstream csv;
    csv << "x,psi\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      csv << format_number(table.at(i)) << ',' << format_number(psi[i]) << '\n';
    }
    text = csv.str();
  } else {
    nlohmann::ordered_json doc;
    doc["n"] = config.level;
    doc["E"] = std::stod(format_number(to_double(energy(config.level, params))));
    doc["E_exact"] = to_string(energy(config.level, params));
    doc["form"] = nlohmann::ordered_json::parse(form_json(form));
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      rows.push_back({std::stod(format_number(table.at(i))), std::stod(format_number(psi[i]))});
    }
    doc["samples"] = std::move(rows);
    text = doc.dump(2) + "\n";
  }
  emit(config, "eigenfunction_" + std::to_string(config.level) + extension(format), text, out);
  return kSuccess;
}

std::string validation_table(const ValidationReport& report) {
  std::ostringstream table;
  table << std::left << std::setw(24) << "check" << std::setw(8) << "status" << std::setw(20) << "measured"
        << std::setw(20) << "threshold" << "detail\n";
  for (const CheckResult& check : report.checks) {
    table << std::left << std::setw(24) << check.name << std::setw(8) << (check.passed ? "PASS" : "FAIL")
          << std::setw(20) << format_number(check.measured) << std::setw(20) << format_number(check.threshold)
          << check.detail << '\n';
  }
  table << "energies (n, closed, numeric)\n";
  for (std::size_t n = 0; n < report.closed_energies.size(); ++n) {
    table << "  " << n << "  " << format_number(report.closed_energies[n]) << "  "
          << format_number(report.numeric_energies[n]) << '\n';
  }
  table << (report.passed() ? "RESULT PASS\n" : "RESULT FAIL\n");
  return table.str();
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ModelParams params = parse_params(config);
  ValidationOptions options;
  options.grid = grid_of(config, params);
  options.perturbation = config.perturbation;
  const ValidationReport report = run_validation(params, options);

  std::string text;
  std::string name = "validate.txt";
  if (!config.format) {
    text = validation_table(report);
  } else if (*config.format == "json") {
    text = validation_json(report);
    name = "validate.json";
  } else {
    std::ostringstream csv;
    csv << "check,passed,measured,threshold\n";
    for (const CheckResult& check : report.checks) {
      csv << check.name << ',' << (check.passed ? 1 : 0) << ',' << format_number(check.measured) << ','
          << format_number(check.threshold) << '\n';
    }
    text = csv.str();
    name = "validate.csv";
  }
  emit(config, name, text, out);
  if (const CheckResult* failure = report.first_failure()) {
    err << "validation failed: " << failure->name << '\n';
    return kValidationFailed;
  }
  return kSuccess;
}

int cmd_figure(const RunConfig& config, std::ostream& out) {
  const ModelParams params = parse_params(config);
  const Spectrum spectrum = full_spectrum(params);
  const double asymptote = to_double(spectrum.asymptote);
  const RadialGrid base = grid_of(config, params);

  // Start where the repulsive wall has come down to twice the asymptote.
  double x_start = base.x_min();
  while (potential_closed_form(x_start, params) > 2.0 * asymptote) x_start *= 1.01;
  const RadialGrid plot(x_start, base.x_max(), std::max(config.samples, RadialGrid::kMinPoints));

  std::vector<std::vector<double>> envelopes;
  for (const Level& level : spectrum.levels) envelopes.push_back(sample_normalized(eigenfunction(level.n, params), plot));
  std::vector<double> peaks;
  for (const auto& psi : envelopes) {
    double peak = 0.0;
    for (double v : psi) peak = std::max(peak, std::abs(v));
    peaks.push_back(peak);
  }
  constexpr double kLevelThreshold = 1e-3;
  const Format format = format_of(config, Format::Csv);

  std::string text;
  if (format == Format::Csv) {
    std::ostringstream csv;
    csv << "x,V";
    for (const Level& level : spectrum.levels) csv << ",E" << level.n;
    csv << ",asymptote\n";
    for (std::size_t i = 0; i < plot.size(); ++i) {
      const double x = plot.at(i);
      csv << format_number(x) << ',' << format_number(potential_closed_form(x, params));
      for (std::size_t n = 0; n < spectrum.levels.size(); ++n) {
        csv << ',';
        if (std::abs(envelopes[n][i]) > kLevelThreshold * peaks[n]) {
          csv << format_number(to_double(spectrum.levels[n].energy));
        }
      }
      csv << ',' << format_number(asymptote) << '\n';
    }
    text = csv.str();
  } else {
    nlohmann::ordered_json doc;
    doc["asymptote"] = asymptote;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array(), vs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < plot.size(); ++i) {
      xs.push_back(std::stod(format_number(plot.at(i))));
      vs.push_back(std::stod(format_number(potential_closed_form(plot.at(i), params))));
    }
    doc["x"] = std::move(xs);
    doc["V"] = std::move(vs);
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < spectrum.levels.size(); ++n) {
      double lo = 0.0, hi = 0.0;
      bool seen = false;
      for (std::size_t i = 0; i < plot.size(); ++i) {
        if (std::abs(envelopes[n][i]) <= kLevelThreshold * peaks[n]) continue;
        if (!seen) lo = plot.at(i);
        hi = plot.at(i);
        seen = true;
      }
      levels.push_back({{"n", n},
                        {"E", std::stod(format_number(to_double(spectrum.levels[n].energy)))},
                        {"x_from", std::stod(format_number(lo))},
                        {"x_to", std::stod(format_number(hi))}});
    }
    doc["levels"] = std::move(levels);
    text = doc.dump(2) + "\n";
  }
  emit(config, "figure" + extension(format), text, out);
  return kSuccess;
}

int cmd_minimum(const RunConfig& config, std::ostream& out) {
  const ModelParams params = parse_params(config);
  const MinimumReport report = find_minimum(params);
  const Format format = format_of(config, Format::Json);
  std::string text;
  if (format == Format::Csv) {
    std::ostringstream csv;
    csv << "key,value\n"
        << "x0," << format_number(report.x0) << '\n'
        << "V_min," << format_number(report.V_min) << '\n'
        << "derivative_residual," << format_number(report.derivative_residual) << '\n'
        << "probe_t_exp_p_x0," << format_number(report.probe_exp_px0) << '\n'
        << "probe_t_exp_x0," << format_number(report.probe_exp_x0) << '\n';
    text = csv.str();
  } else {
    text = minimum_json(report);
  }
  emit(config, "minimum" + extension(format), text, out);
  return kSuccess;
}

void add_common_options(CLI::App* command, RunConfig& config) {
  command->add_option("--B", config.B_text, "B > 0 (decimal or num/den)")->required();
  command->add_option("--p", config.p_text, "0 < p < B (decimal or num/den)")->required();
  command->add_option("--x-min", config.x_min, "oracle grid left end");
  command->add_option("--x-max", config.x_max, "oracle grid right end");
  command->add_option("--grid-points", config.grid_points, "oracle interior grid points");
  command->add_option("--format", config.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  command->add_option("--out", config.out_path, "write output to PATH instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectrum, eigenfunctions and numerical cross-checks for W = A tanh(3px) - B coth(px)"};
  app.require_subcommand(1);
  RunConfig config;

  auto* spectrum = app.add_subcommand("spectrum", "closed-form energies and n_max");
  auto* eigen = app.add_subcommand("eigenfunction", "exact eigenfunction and sampled table");
  auto* validate = app.add_subcommand("validate", "closed form vs numerical eigensolver");
  auto* figure = app.add_subcommand("figure", "potential and level lines as plot data");
  auto* minimum = app.add_subcommand("minimum", "location and depth of the potential well");
  for (auto* command : {spectrum, eigen, validate, figure, minimum}) add_common_options(command, config);
  eigen->add_option("-n", config.level, "level index")->required();
  eigen->add_option("--samples", config.samples, "rows in the sampled table");
  figure->add_option("--samples", config.samples, "rows in the plot table");
  validate->add_option("--perturb-potential", config.perturbation, "scale the oracle potential by 1 + EPS (test only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadParameters;
  }

  try {
    if (*spectrum) return cmd_spectrum(config, out);
    if (*eigen) return cmd_eigenfunction(config, out);
    if (*validate) return cmd_validate(config, out, err);
    if (*figure) return cmd_figure(config, out);
    if (*minimum) return cmd_minimum(config, out);
  } catch (const ParameterError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kBadParameters;
  } catch (const UsageError& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kBadParameters;
  } catch (const IndexError& e) {
    err << "level out of range: " << e.what() << '\n';
    return kIndexOutOfRange;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailed;
  }
  return kBadParameters;
}

}  // namespace susy::cli
