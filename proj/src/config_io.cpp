#include "cnb/config_io.hpp"

#include <fstream>

#include <json.hpp>

namespace cnb {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key))
    throw parse_error(where + ": missing required key '" + key + "'");
  if (!j[key].is_number())
    throw parse_error(where + ": key '" + key + "' must be a number");
  return j[key].get<double>();
}

std::string require_string(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw parse_error(where + ": missing string key '" + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

const OperatingPoint& LoadedConfig::find(const std::string& label) const {
  for (const auto& op : operating_points)
    if (op.label == label) return op;
  throw validation_error("config has no operating point labeled '" + label + "'");
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("config '" + path.string() + "': " + e.what());
  }

  LoadedConfig cfg;
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    throw parse_error("config: missing integer 'schema_version'");
  cfg.schema_version = j["schema_version"].get<int>();
  if (cfg.schema_version != 1)
    throw parse_error("config: unsupported schema_version " +
                      std::to_string(cfg.schema_version));

  const json& cav = j.at("cavity");
  cfg.cavity.length_m = require_number(cav, "length_m", "cavity");
  cfg.cavity.wavelength_m = require_number(cav, "wavelength_m", "cavity");
  cfg.cavity.t_in = require_number(cav, "t_in", "cavity");
  cfg.cavity.t_end = require_number(cav, "t_end", "cavity");
  cfg.cavity.loss_rt = require_number(cav, "loss_rt", "cavity");
  cfg.cavity.temperature_k =
      cav.contains("temperature_k") ? cav["temperature_k"].get<double>() : 295.0;
  cfg.cavity.validate();

  const json& mech = j.at("mechanics");
  for (const auto& jm : mech.at("modes")) {
    MechanicalMode m;
    m.name = require_string(jm, "name", "mode");
    m.f_m_hz = require_number(jm, "f_m_hz", "mode '" + m.name + "'");
    m.quality = require_number(jm, "q", "mode '" + m.name + "'");
    m.modal_mass_kg = require_number(jm, "modal_mass_kg", "mode '" + m.name + "'");
    m.damping = damping_from_string(require_string(jm, "damping", "mode '" + m.name + "'"));
    m.uncertain = jm.contains("uncertain") && jm["uncertain"].get<bool>();
    cfg.mechanics.modes.push_back(std::move(m));
    cfg.mechanics.coupling_scale.push_back(
        jm.contains("coupling_scale") ? jm["coupling_scale"].get<double>() : 1.0);
  }
  cfg.mechanics.validate();

  const json& noi = j.at("noise");
  cfg.noise.rin_per_sqrthz = require_number(noi, "rin_per_sqrthz", "noise");
  cfg.noise.dark_asd_w_per_sqrthz = require_number(noi, "dark_asd_w_per_sqrthz", "noise");
  cfg.noise.validate();

  if (j.contains("operating_points")) {
    for (const auto& jo : j["operating_points"]) {
      const std::string label = require_string(jo, "label", "operating point");
      const double p_in = require_number(jo, "p_in_w", "operating point '" + label + "'");
      const double det = require_number(jo, "detuning_hwhm", "operating point '" + label + "'");
      const double zeta = jo.contains("detection_quadrature_rad")
                              ? jo["detection_quadrature_rad"].get<double>()
                              : 0.0;
      cfg.operating_points.push_back(operating_point(cfg.cavity, p_in, det, zeta, label));
    }
  }
  return cfg;
}

std::string serialize_config(const LoadedConfig& cfg) {
  json j;
  j["schema_version"] = cfg.schema_version;
  j["cavity"] = {{"length_m", cfg.cavity.length_m},
                 {"wavelength_m", cfg.cavity.wavelength_m},
                 {"t_in", cfg.cavity.t_in},
                 {"t_end", cfg.cavity.t_end},
                 {"loss_rt", cfg.cavity.loss_rt},
                 {"temperature_k", cfg.cavity.temperature_k}};
  json modes = json::array();
  for (std::size_t i = 0; i < cfg.mechanics.modes.size(); ++i) {
    const auto& m = cfg.mechanics.modes[i];
    json jm = {{"name", m.name},
               {"f_m_hz", m.f_m_hz},
               {"q", m.quality},
               {"modal_mass_kg", m.modal_mass_kg},
               {"damping", to_string(m.damping)},
               {"coupling_scale", cfg.mechanics.coupling_scale[i]}};
    if (m.uncertain) jm["uncertain"] = true;
    modes.push_back(std::move(jm));
  }
  j["mechanics"] = {{"modes", std::move(modes)}};
  j["noise"] = {{"rin_per_sqrthz", cfg.noise.rin_per_sqrthz},
                {"dark_asd_w_per_sqrthz", cfg.noise.dark_asd_w_per_sqrthz}};
  json ops = json::array();
  for (const auto& op : cfg.operating_points) {
    ops.push_back({{"label", op.label},
                   {"p_in_w", op.p_in_w},
                   {"detuning_hwhm", op.detuning_hwhm},
                   {"detection_quadrature_rad", op.detection_quadrature_rad}});
  }
  j["operating_points"] = std::move(ops);
  return j.dump(2) + "\n";
}

}  // namespace cnb
