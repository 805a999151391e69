// Command-line front end: runs scenarios, validates spectrum files and
// compares model totals against imported measurements.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cnb/scenario.hpp"

namespace {

cnb::Band parse_band(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--bands", "expected f1:f2, got '" + s + "'");
  return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

std::optional<cnb::GridSpec> parse_grid(const std::string& s) {
  if (s.empty()) return std::nullopt;
  cnb::GridSpec g;
  const auto c1 = s.find(':');
  const auto c2 = s.find(':', c1 == std::string::npos ? std::string::npos : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("--grid", "expected fmin:fmax:points_per_decade, got '" + s + "'");
  g.f_min_hz = std::stod(s.substr(0, c1));
  g.f_max_hz = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  g.points_per_decade = std::stod(s.substr(c2 + 1));
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optomechanical cavity displacement-noise budget"};
  app.require_subcommand(1);

  // run
  std::string scenario_file, out_dir, grid_spec;
  bool seedless = false;
  auto* run = app.add_subcommand("run", "Run a scenario and write CSV/JSON artifacts");
  run->add_option("scenario", scenario_file, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory (overrides scenario and NOISEBUDGET_OUT)");
  run->add_option("--grid", grid_spec, "grid override as fmin:fmax:points_per_decade");
  run->add_flag("--seedless", seedless,
                "reserved; every computation is already deterministic");

  // import-check
  std::string import_file;
  auto* imp = app.add_subcommand("import-check", "Validate a spectrum CSV file");
  imp->add_option("file", import_file, "spectrum CSV")->required();

  // compare
  std::string model_summary, measured_csv, op_label;
  std::vector<std::string> band_args;
  auto* cmp = app.add_subcommand("compare", "Compare an imported measurement against a model total");
  cmp->add_option("model", model_summary, "summary.json from a run")->required();
  cmp->add_option("measured", measured_csv, "measured spectrum CSV")->required();
  cmp->add_option("--bands", band_args, "bands as f1:f2 [Hz]");
  cmp->add_option("--op", op_label, "operating point label (default: first in summary)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cnb::RunOptions opts;
      if (!out_dir.empty()) opts.out_override = out_dir;
      opts.grid_override = parse_grid(grid_spec);
      const auto summary = cnb::run_scenario(scenario_file, opts);
      std::cout << "wrote " << summary.string() << "\n";
    } else if (*imp) {
      const cnb::NoiseSpectrum s = cnb::import_spectrum(import_file);
      std::cout << "ok: " << s.grid.size() << " points, " << cnb::format_double(s.grid.f_hz.front())
                << " Hz to " << cnb::format_double(s.grid.f_hz.back()) << " Hz, label '" << s.label
                << "'\n";
    } else if (*cmp) {
      std::vector<cnb::Band> bands;
      for (const auto& b : band_args) bands.push_back(parse_band(b));
      const cnb::NoiseSpectrum model = cnb::load_total_from_summary(model_summary, op_label);
      const cnb::NoiseSpectrum measured = cnb::import_spectrum(measured_csv);
      std::cout << cnb::compare_report_json(cnb::compare_spectra(model, measured, bands));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
