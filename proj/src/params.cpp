#include "cnb/params.hpp"

#include <cmath>

namespace cnb {

std::string to_string(DampingLaw law) {
  return law == DampingLaw::structural ? "structural" : "viscous";
}

DampingLaw damping_from_string(const std::string& s) {
  if (s == "structural") return DampingLaw::structural;
  if (s == "viscous") return DampingLaw::viscous;
  throw validation_error("damping must be 'structural' or 'viscous', got '" + s + "'");
}

void MechanicalMode::validate() const {
  if (!(f_m_hz > 0.0)) throw validation_error("mode '" + name + "': f_m_hz must be > 0");
  if (!(quality > 0.0)) throw validation_error("mode '" + name + "': q must be > 0");
  if (!(modal_mass_kg > 0.0))
    throw validation_error("mode '" + name + "': modal_mass_kg must be > 0");
}

void MechanicalModel::validate() const {
  if (modes.empty()) throw validation_error("mechanics: at least one mode is required");
  if (coupling_scale.size() != modes.size())
    throw validation_error("mechanics: coupling_scale length must match the mode list");
  for (const auto& m : modes) m.validate();
  for (std::size_t i = 0; i < coupling_scale.size(); ++i) {
    if (!(coupling_scale[i] >= 0.0))
      throw validation_error("mode '" + modes[i].name + "': coupling_scale must be >= 0");
  }
}

void CavityConfig::validate() const {
  if (!(length_m > 0.0)) throw validation_error("cavity: length_m must be > 0");
  if (!(wavelength_m > 0.0)) throw validation_error("cavity: wavelength_m must be > 0");
  if (!(t_in > 0.0 && t_in < 1.0)) throw validation_error("cavity: t_in must be in (0, 1)");
  // t_end and loss_rt may be exactly zero: the single-port lossless cavity is a
  // meaningful configuration (sideband reflection is unitary there).
  if (!(t_end >= 0.0 && t_end < 1.0)) throw validation_error("cavity: t_end must be in [0, 1)");
  if (!(loss_rt >= 0.0 && loss_rt < 1.0))
    throw validation_error("cavity: loss_rt must be in [0, 1)");
  if (!(total_loss() < 1.0))
    throw validation_error("cavity: t_in + t_end + loss_rt must be < 1");
  if (!(temperature_k > 0.0)) throw validation_error("cavity: temperature_k must be > 0");
}

void OperatingPoint::validate() const {
  if (!(p_in_w >= 0.0)) throw validation_error("operating point '" + label + "': p_in_w must be >= 0");
  if (!(p_circ_w >= 0.0))
    throw validation_error("operating point '" + label + "': p_circ_w must be >= 0");
  if (!std::isfinite(detuning_hwhm))
    throw validation_error("operating point '" + label + "': detuning_hwhm must be finite");
  const double tol = 1e-9 * (p_in_w > 0.0 ? p_in_w : 1.0);
  if (p_refl_w + p_trans_w > p_in_w + tol)
    throw validation_error("operating point '" + label +
                           "': p_refl + p_trans must not exceed p_in");
}

void NoiseParams::validate() const {
  if (!(rin_per_sqrthz >= 0.0)) throw validation_error("noise: rin_per_sqrthz must be >= 0");
  if (!(dark_asd_w_per_sqrthz >= 0.0))
    throw validation_error("noise: dark_asd_w_per_sqrthz must be >= 0");
}

FrequencyGrid FrequencyGrid::log_spaced(double f_min_hz, double f_max_hz,
                                        double points_per_decade) {
  if (!(f_min_hz > 0.0) || !(f_max_hz > f_min_hz))
    throw validation_error("grid: need 0 < f_min_hz < f_max_hz");
  if (!(points_per_decade > 0.0))
    throw validation_error("grid: points_per_decade must be > 0");
  const double lg0 = std::log10(f_min_hz);
  const double lg1 = std::log10(f_max_hz);
  const auto n = static_cast<std::size_t>(std::llround((lg1 - lg0) * points_per_decade));
  FrequencyGrid g;
  g.f_hz.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    g.f_hz.push_back(std::pow(10.0, lg0 + static_cast<double>(k) / points_per_decade));
  }
  g.f_hz.back() = f_max_hz;  // land exactly on the requested upper edge
  g.validate();
  return g;
}

void FrequencyGrid::validate() const {
  if (f_hz.empty()) throw validation_error("grid: must not be empty");
  double prev = 0.0;
  for (double f : f_hz) {
    if (!(f > 0.0) || !std::isfinite(f)) throw validation_error("grid: frequencies must be positive and finite");
    if (!(f > prev)) throw validation_error("grid: frequencies must be strictly increasing");
    prev = f;
  }
}

}  // namespace cnb
