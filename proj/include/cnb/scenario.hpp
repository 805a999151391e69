#pragma once

#include <optional>

#include "cnb/calibration.hpp"
#include "cnb/config_io.hpp"
#include "cnb/csv_io.hpp"

namespace cnb {

struct GridSpec {
  double f_min_hz = 100.0;
  double f_max_hz = 1.0e6;
  double points_per_decade = 500.0;

  FrequencyGrid build() const {
    return FrequencyGrid::log_spaced(f_min_hz, f_max_hz, points_per_decade);
  }
};

struct SlopeFitSpec {
  std::string component;
  Band band_hz;
};

struct PowerScanSpec {
  std::vector<std::string> operating_points;
  Band band_hz;
};

struct ThermometrySpec {
  Band band_hz;
  double temperature_scale = 4.0;
};

struct VisibilityPoint {
  std::string component;
  double f_hz = 0.0;
};

struct ScenarioAnalyses {
  std::optional<Band> attribution_band_hz;
  std::vector<SlopeFitSpec> slope_fits;
  std::optional<Band> sql_band_hz;
  std::optional<PowerScanSpec> power_scan;
  std::optional<ThermometrySpec> thermometry;
  std::vector<VisibilityPoint> visibility_points;
};

struct Scenario {
  int schema_version = 0;
  std::string name;
  std::filesystem::path config_path;  // resolved against the scenario file's directory
  GridSpec grid;
  ScenarioAnalyses analyses;
  std::filesystem::path output_dir;
};

Scenario load_scenario(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::filesystem::path> out_override;  // --out beats NOISEBUDGET_OUT beats scenario
  std::optional<GridSpec> grid_override;
};

// Runs every analysis, writes one CSV per component and operating point plus
// summary.json. Deterministic: identical inputs produce identical bytes.
// Partial outputs are removed when anything fails.
std::filesystem::path run_scenario(const std::filesystem::path& scenario_path,
                                   const RunOptions& options = {});

// Reads and validates a SpectrumFile CSV.
NoiseSpectrum import_spectrum(const std::filesystem::path& path);

// Per-band rms ratio (measurement over model).
struct CompareReport {
  struct Entry {
    Band band_hz;
    double model_rms_m = 0.0;
    double measured_rms_m = 0.0;
    double ratio = 0.0;
  };
  std::vector<Entry> entries;
};

CompareReport compare_spectra(const NoiseSpectrum& model_total, const NoiseSpectrum& measured,
                              const std::vector<Band>& bands);

std::string compare_report_json(const CompareReport& report);

// Resolves the model total-spectrum CSV recorded in a run's summary.json.
// `op_label` empty means the first operating point in the summary.
NoiseSpectrum load_total_from_summary(const std::filesystem::path& summary_path,
                                      const std::string& op_label = "");

// FNV-1a over the scenario file bytes and the config file bytes; quoted in
// every artifact so outputs change exactly when inputs do.
std::string scenario_hash(const std::filesystem::path& scenario_path,
                          const std::filesystem::path& config_path);

}  // namespace cnb
