#pragma once

#include "cnb/budget.hpp"

namespace cnb {

// Constants of the measurement chain. The piezo and detector gains are input
// constants (calibrated separately in the lab); they cancel in every
// synthesize-then-calibrate round trip.
struct CalibrationChain {
  double cavity_length_m = 0.0;
  double laser_frequency_hz = 0.0;
  double loop_unity_gain_hz = 0.0;  // unity-gain frequency of the single-pole lock servo
  double volts_per_watt = 1.0;      // detector transimpedance gain

  void validate() const;
};

// Equivalence of laser-frequency and cavity-length fluctuations:
// dx = L * dnu / nu.
double frequency_shift_to_displacement(double dnu_hz, const CalibrationChain& chain);

// Lock-servo open-loop gain, G(f) = -i f_ug / f (integrator with unity gain
// at f_ug). Only |1 + G| matters and it cancels from calibrated results.
complex loop_gain(const CalibrationChain& chain, double f_hz);

// |tf(f)|: displacement-to-detector-volts transfer magnitude, including the
// cavity/quadrature plant, loop suppression and detector gain [V/m].
std::vector<double> measurement_transfer(const CavityConfig& config, const OperatingPoint& op,
                                         const MechanicalMode& mode,
                                         const CalibrationChain& chain,
                                         const FrequencyGrid& grid);

// raw(f) = x(f) * |tf(f)|; forward model of the detected error-signal ASD.
NoiseSpectrum synthesize_error_signal(const NoiseSpectrum& displacement,
                                      const std::vector<double>& transfer_mag);

// asd_x(f) = raw(f) / |tf(f)|. Throws naming the frequency when |tf| falls
// below `floor` (calibration blow-up).
NoiseSpectrum apply_calibration(const NoiseSpectrum& raw, const std::vector<double>& transfer_mag,
                                double floor = 0.0);

}  // namespace cnb
