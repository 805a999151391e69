#include "cnb/calibration.hpp"

#include <cmath>

namespace cnb {

void CalibrationChain::validate() const {
  if (!(cavity_length_m > 0.0))
    throw validation_error("calibration: cavity_length_m must be > 0");
  if (!(laser_frequency_hz > 0.0))
    throw validation_error("calibration: laser_frequency_hz must be > 0");
  if (!(loop_unity_gain_hz >= 0.0))
    throw validation_error("calibration: loop_unity_gain_hz must be >= 0");
  if (!(volts_per_watt > 0.0))
    throw validation_error("calibration: volts_per_watt must be > 0");
}

double frequency_shift_to_displacement(double dnu_hz, const CalibrationChain& chain) {
  chain.validate();
  return chain.cavity_length_m * dnu_hz / chain.laser_frequency_hz;
}

complex loop_gain(const CalibrationChain& chain, double f_hz) {
  if (chain.loop_unity_gain_hz == 0.0) return {0.0, 0.0};
  return complex(0.0, -chain.loop_unity_gain_hz / f_hz);
}

std::vector<double> measurement_transfer(const CavityConfig& config, const OperatingPoint& op,
                                         const MechanicalMode& mode,
                                         const CalibrationChain& chain,
                                         const FrequencyGrid& grid) {
  chain.validate();
  // Vacuum-normalized quadrature units -> watts on the detector via the
  // reflected carrier, then volts via the detector gain.
  const double quad_to_watts =
      std::sqrt(2.0 * constants::hbar * config.omega0() * std::max(op.p_refl_w, 0.0));
  std::vector<double> tf;
  tf.reserve(grid.size());
  for (double f : grid.f_hz) {
    const double plant = std::abs(signal_plant(config, op, mode, f));
    const double suppression = 1.0 / std::abs(1.0 + loop_gain(chain, f));
    tf.push_back(chain.volts_per_watt * quad_to_watts * plant * suppression);
  }
  return tf;
}

NoiseSpectrum synthesize_error_signal(const NoiseSpectrum& displacement,
                                      const std::vector<double>& transfer_mag) {
  if (transfer_mag.size() != displacement.grid.size())
    throw validation_error("synthesize_error_signal: transfer length must match the grid");
  NoiseSpectrum raw;
  raw.grid = displacement.grid;
  raw.label = displacement.label + ":error_signal";
  raw.asd.reserve(displacement.asd.size());
  for (std::size_t i = 0; i < displacement.asd.size(); ++i)
    raw.asd.push_back(displacement.asd[i] * transfer_mag[i]);
  return raw;
}

NoiseSpectrum apply_calibration(const NoiseSpectrum& raw, const std::vector<double>& transfer_mag,
                                double floor) {
  if (transfer_mag.size() != raw.grid.size())
    throw validation_error("apply_calibration: transfer length must match the grid");
  NoiseSpectrum x;
  x.grid = raw.grid;
  x.label = raw.label + ":calibrated";
  x.asd.reserve(raw.asd.size());
  for (std::size_t i = 0; i < raw.asd.size(); ++i) {
    if (!(transfer_mag[i] > floor) || transfer_mag[i] == 0.0)
      throw validation_error("apply_calibration: transfer magnitude below floor at " +
                             std::to_string(raw.grid.f_hz[i]) + " Hz");
    x.asd.push_back(raw.asd[i] / transfer_mag[i]);
  }
  return x;
}

}  // namespace cnb
