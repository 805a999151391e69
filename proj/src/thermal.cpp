#include "cnb/thermal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnb {

NoiseSpectrum mode_thermal_asd(const MechanicalMode& mode, double temperature_k,
                               const FrequencyGrid& grid) {
  if (!(temperature_k > 0.0)) throw std::domain_error("mode_thermal_asd: temperature must be > 0");
  mode.validate();
  NoiseSpectrum out;
  out.grid = grid;
  out.label = "thermal:" + mode.name;
  out.asd.reserve(grid.size());
  for (double f : grid.f_hz) {
    const double w = 2.0 * std::numbers::pi * f;
    const Susceptibility chi = susceptibility(mode, f);
    // single-sided FDT: S_x = (4 k_B T / omega) Im[-chi]
    const double s_x = 4.0 * constants::k_B * temperature_k / w * (-chi.imag());
    out.asd.push_back(std::sqrt(s_x));
  }
  return out;
}

NoiseSpectrum total_thermal_asd(const MechanicalModel& model, double temperature_k,
                                const FrequencyGrid& grid) {
  model.validate();
  std::vector<NoiseSpectrum> parts;
  parts.reserve(model.modes.size());
  for (std::size_t i = 0; i < model.modes.size(); ++i) {
    parts.push_back(scaled(mode_thermal_asd(model.modes[i], temperature_k, grid),
                           model.coupling_scale[i]));
  }
  return quadrature_sum(parts, "thermal");
}

double infer_temperature_ratio(const NoiseSpectrum& asd_a, const NoiseSpectrum& asd_b,
                               Band band) {
  if (!(asd_a.grid == asd_b.grid))
    throw validation_error("infer_temperature_ratio: spectra must share one grid");
  const double pa = band_psd_integral(asd_a, band);
  const double pb = band_psd_integral(asd_b, band);
  if (!(pa > 0.0))
    throw validation_error("infer_temperature_ratio: reference spectrum has zero band power");
  return pb / pa;
}

}  // namespace cnb
