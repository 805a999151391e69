#include "cnb/scenario.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "cnb/thermal.hpp"

namespace cnb {

using nlohmann::json;

namespace {

Band band_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw parse_error(where + ": band must be an array [f1_hz, f2_hz]");
  Band b{j[0].get<double>(), j[1].get<double>()};
  if (!(b.first > 0.0 && b.second > b.first))
    throw parse_error(where + ": band must satisfy 0 < f1 < f2");
  return b;
}

json band_to_json(Band b) { return json::array({b.first, b.second}); }

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string read_file_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_band_inside(const FrequencyGrid& grid, Band band, const std::string& what) {
  if (band.first < grid.f_hz.front() || band.second > grid.f_hz.back())
    throw validation_error(what + ": band [" + format_double(band.first) + ", " +
                           format_double(band.second) + "] Hz lies outside the grid [" +
                           format_double(grid.f_hz.front()) + ", " +
                           format_double(grid.f_hz.back()) + "] Hz");
}

// Removes everything created by a failed run, newest first.
struct OutputJanitor {
  std::vector<std::filesystem::path> created;
  bool armed = true;

  void track(const std::filesystem::path& p) { created.push_back(p); }
  ~OutputJanitor() {
    if (!armed) return;
    std::error_code ec;
    for (auto it = created.rbegin(); it != created.rend(); ++it)
      std::filesystem::remove(*it, ec);
  }
};

}  // namespace

Scenario load_scenario(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file_bytes(path));
  } catch (const json::exception& e) {
    throw parse_error("scenario '" + path.string() + "': " + e.what());
  }
  Scenario sc;
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    throw parse_error("scenario: missing integer 'schema_version'");
  sc.schema_version = j["schema_version"].get<int>();
  if (sc.schema_version != 1)
    throw parse_error("scenario: unsupported schema_version " + std::to_string(sc.schema_version));
  sc.name = j.at("name").get<std::string>();
  sc.config_path = path.parent_path() / j.at("config").get<std::string>();
  if (j.contains("grid")) {
    const json& g = j["grid"];
    sc.grid.f_min_hz = g.value("f_min_hz", sc.grid.f_min_hz);
    sc.grid.f_max_hz = g.value("f_max_hz", sc.grid.f_max_hz);
    sc.grid.points_per_decade = g.value("points_per_decade", sc.grid.points_per_decade);
  }
  sc.output_dir = j.value("output_dir", std::string("out/") + sc.name);
  if (j.contains("analyses")) {
    const json& a = j["analyses"];
    if (a.contains("attribution_band_hz"))
      sc.analyses.attribution_band_hz = band_from_json(a["attribution_band_hz"], "attribution");
    if (a.contains("slope_fits")) {
      for (const auto& s : a["slope_fits"]) {
        SlopeFitSpec fit;
        fit.component = s.at("component").get<std::string>();
        fit.band_hz = band_from_json(s.at("band_hz"), "slope fit");
        sc.analyses.slope_fits.push_back(std::move(fit));
      }
    }
    if (a.contains("sql_band_hz"))
      sc.analyses.sql_band_hz = band_from_json(a["sql_band_hz"], "sql");
    if (a.contains("power_scan")) {
      PowerScanSpec ps;
      for (const auto& s : a["power_scan"].at("operating_points"))
        ps.operating_points.push_back(s.get<std::string>());
      ps.band_hz = band_from_json(a["power_scan"].at("band_hz"), "power scan");
      sc.analyses.power_scan = std::move(ps);
    }
    if (a.contains("thermometry")) {
      ThermometrySpec th;
      th.band_hz = band_from_json(a["thermometry"].at("band_hz"), "thermometry");
      th.temperature_scale = a["thermometry"].value("temperature_scale", 4.0);
      sc.analyses.thermometry = th;
    }
    if (a.contains("visibility_points")) {
      for (const auto& v : a["visibility_points"]) {
        sc.analyses.visibility_points.push_back(
            {v.at("component").get<std::string>(), v.at("f_hz").get<double>()});
      }
    }
  }
  return sc;
}

std::string scenario_hash(const std::filesystem::path& scenario_path,
                          const std::filesystem::path& config_path) {
  const std::uint64_t h =
      fnv1a64(read_file_bytes(config_path), fnv1a64(read_file_bytes(scenario_path)));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

NoiseSpectrum import_spectrum(const std::filesystem::path& path) {
  return read_spectrum_csv(path);
}

CompareReport compare_spectra(const NoiseSpectrum& model_total, const NoiseSpectrum& measured,
                              const std::vector<Band>& bands) {
  CompareReport report;
  for (Band b : bands) {
    CompareReport::Entry e;
    e.band_hz = b;
    e.model_rms_m = band_integrate(model_total, b);
    e.measured_rms_m = band_integrate(measured, b);
    if (!(e.model_rms_m > 0.0))
      throw validation_error("compare: model rms is zero in band [" + format_double(b.first) +
                             ", " + format_double(b.second) + "] Hz");
    e.ratio = e.measured_rms_m / e.model_rms_m;
    report.entries.push_back(e);
  }
  return report;
}

std::string compare_report_json(const CompareReport& report) {
  json j;
  j["bands"] = json::array();
  for (const auto& e : report.entries) {
    j["bands"].push_back({{"band_hz", band_to_json(e.band_hz)},
                          {"model_rms_m", e.model_rms_m},
                          {"measured_rms_m", e.measured_rms_m},
                          {"ratio_measured_over_model", e.ratio}});
  }
  return j.dump(2) + "\n";
}

NoiseSpectrum load_total_from_summary(const std::filesystem::path& summary_path,
                                      const std::string& op_label) {
  json j;
  try {
    j = json::parse(read_file_bytes(summary_path));
  } catch (const json::exception& e) {
    throw parse_error("summary '" + summary_path.string() + "': " + e.what());
  }
  const json& ops = j.at("operating_points");
  for (const auto& op : ops) {
    if (op_label.empty() || op.at("label").get<std::string>() == op_label) {
      const std::string rel = op.at("artifacts").at("total_csv").get<std::string>();
      return read_spectrum_csv(summary_path.parent_path() / rel);
    }
  }
  throw validation_error("summary has no operating point labeled '" + op_label + "'");
}

std::filesystem::path run_scenario(const std::filesystem::path& scenario_path,
                                   const RunOptions& options) {
  const Scenario sc = load_scenario(scenario_path);
  const LoadedConfig cfg = load_config(sc.config_path);
  const std::string hash = scenario_hash(scenario_path, sc.config_path);

  std::filesystem::path out_dir = sc.output_dir;
  if (const char* env = std::getenv("NOISEBUDGET_OUT"); env && *env)
    out_dir = std::filesystem::path(env) / sc.name;
  if (options.out_override) out_dir = *options.out_override;

  const GridSpec grid_spec = options.grid_override.value_or(sc.grid);
  const FrequencyGrid grid = grid_spec.build();

  // Validate every referenced band and operating point before writing a byte.
  if (sc.analyses.attribution_band_hz)
    require_band_inside(grid, *sc.analyses.attribution_band_hz, "attribution");
  for (const auto& s : sc.analyses.slope_fits)
    require_band_inside(grid, s.band_hz, "slope fit for '" + s.component + "'");
  if (sc.analyses.sql_band_hz) require_band_inside(grid, *sc.analyses.sql_band_hz, "sql");
  if (sc.analyses.power_scan) {
    require_band_inside(grid, sc.analyses.power_scan->band_hz, "power scan");
    for (const auto& label : sc.analyses.power_scan->operating_points) cfg.find(label);
  }
  if (sc.analyses.thermometry)
    require_band_inside(grid, sc.analyses.thermometry->band_hz, "thermometry");
  if (cfg.operating_points.empty())
    throw validation_error("scenario config defines no operating points");

  const BudgetInputs inputs{cfg.cavity, cfg.mechanics, cfg.noise};

  OutputJanitor janitor;
  std::filesystem::create_directories(out_dir);

  json summary;
  summary["schema_version"] = 1;
  summary["scenario"] = {{"name", sc.name}, {"input_hash", hash}};
  summary["units"] = {{"frequency", "Hz"}, {"asd", "m/sqrt(Hz)"}, {"power", "W"}};
  summary["grid"] = {{"f_min_hz", grid.f_hz.front()},
                     {"f_max_hz", grid.f_hz.back()},
                     {"points", grid.size()}};

  json ops_json = json::array();
  for (const auto& op : cfg.operating_points) {
    const NoiseBudget budget = model_budget(inputs, op, grid);
    const std::filesystem::path op_dir = out_dir / op.label;
    std::filesystem::create_directories(op_dir);
    json artifacts;
    for (const auto& comp : budget.components) {
      const auto p = op_dir / (comp.label + ".csv");
      write_spectrum_csv(comp, p);
      janitor.track(p);
      artifacts[comp.label + "_csv"] = (std::filesystem::path(op.label) / (comp.label + ".csv")).string();
    }
    const auto total_path = op_dir / "total.csv";
    write_spectrum_csv(budget.total, total_path);
    janitor.track(total_path);
    artifacts["total_csv"] = (std::filesystem::path(op.label) / "total.csv").string();

    json jop = {{"label", op.label},
                {"p_in_w", op.p_in_w},
                {"p_circ_w", op.p_circ_w},
                {"p_refl_w", op.p_refl_w},
                {"p_trans_w", op.p_trans_w},
                {"detuning_hwhm", op.detuning_hwhm},
                {"detection_quadrature_rad", op.detection_quadrature_rad},
                {"spring_resonance_hz",
                 optical_spring_resonance_hz(cfg.cavity, op, cfg.mechanics.fundamental())},
                {"artifacts", artifacts}};

    if (sc.analyses.attribution_band_hz) {
      const BandStat st = attribute(budget, *sc.analyses.attribution_band_hz);
      json jst = {{"band_hz", band_to_json(st.band)}, {"total_rms_m", st.total_rms_m}};
      for (std::size_t i = 0; i < st.labels.size(); ++i) {
        jst["components"][st.labels[i]] = {{"rms_m", st.rms_m[i]},
                                           {"psd_fraction", st.fractions[i]}};
      }
      jop["attribution"] = std::move(jst);
    }
    for (const auto& fitspec : sc.analyses.slope_fits) {
      const double slope = fit_loglog_slope(budget.component(fitspec.component), fitspec.band_hz);
      jop["slopes"].push_back({{"component", fitspec.component},
                               {"band_hz", band_to_json(fitspec.band_hz)},
                               {"loglog_slope", slope}});
    }
    if (sc.analyses.sql_band_hz) {
      const SqlProximity prox =
          sql_ratio(budget, cfg.mechanics.fundamental().modal_mass_kg, *sc.analyses.sql_band_hz);
      jop["sql"] = {{"band_hz", band_to_json(*sc.analyses.sql_band_hz)},
                    {"min_total_over_sql", prox.min_ratio},
                    {"at_f_hz", prox.at_f_hz}};
    }
    for (const auto& v : sc.analyses.visibility_points) {
      jop["psd_fractions"].push_back(
          {{"component", v.component},
           {"f_hz", v.f_hz},
           {"psd_fraction", psd_fraction_at(budget, v.component, v.f_hz)}});
    }
    ops_json.push_back(std::move(jop));
  }
  summary["operating_points"] = std::move(ops_json);

  if (sc.analyses.power_scan) {
    const auto& spec = *sc.analyses.power_scan;
    std::vector<double> powers;
    double detuning = 0.0, zeta = 0.0;
    for (std::size_t i = 0; i < spec.operating_points.size(); ++i) {
      const OperatingPoint& op = cfg.find(spec.operating_points[i]);
      if (i == 0) {
        detuning = op.detuning_hwhm;
        zeta = op.detection_quadrature_rad;
      } else if (op.detuning_hwhm != detuning ||
                 op.detection_quadrature_rad != zeta) {
        throw validation_error("power scan requires equal detuning and readout quadrature "
                               "across scanned operating points");
      }
      powers.push_back(op.p_circ_w);
    }
    const PowerScanResult scan =
        power_scan(inputs, detuning, zeta, powers, grid, spec.band_hz);
    json jscan = {{"band_hz", band_to_json(spec.band_hz)},
                  {"qrpn_rms_exponent", scan.qrpn_rms_exponent},
                  {"crpn_rms_exponent", scan.crpn_rms_exponent}};
    for (std::size_t i = 0; i < scan.entries.size(); ++i) {
      const auto& e = scan.entries[i];
      json je = {{"label", spec.operating_points[i]},
                 {"p_circ_w", e.op.p_circ_w},
                 {"p_in_w", e.op.p_in_w},
                 {"spring_resonance_hz", e.spring_resonance_hz},
                 {"total_rms_m", e.stat.total_rms_m},
                 {"total_rms_without_qrpn_m", e.counterfactual_total_rms_m}};
      for (std::size_t c = 0; c < e.stat.labels.size(); ++c)
        je["rms_m"][e.stat.labels[c]] = e.stat.rms_m[c];
      jscan["entries"].push_back(std::move(je));
    }
    summary["power_scan"] = std::move(jscan);
  }

  if (sc.analyses.thermometry) {
    const auto& th = *sc.analyses.thermometry;
    const NoiseSpectrum base =
        total_thermal_asd(cfg.mechanics, cfg.cavity.temperature_k, grid);
    const NoiseSpectrum hot = total_thermal_asd(
        cfg.mechanics, cfg.cavity.temperature_k * th.temperature_scale, grid);
    summary["thermometry"] = {
        {"band_hz", band_to_json(th.band_hz)},
        {"temperature_scale", th.temperature_scale},
        {"band_psd_ratio", infer_temperature_ratio(base, hot, th.band_hz)}};
  }

  const auto summary_path = out_dir / "summary.json";
  {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + summary_path.string());
    out << summary.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + summary_path.string());
  }
  janitor.track(summary_path);

  janitor.armed = false;  // success: keep everything
  return summary_path;
}

}  // namespace cnb
