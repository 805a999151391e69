#pragma once

#include "cnb/mechanics.hpp"
#include "cnb/spectrum.hpp"

namespace cnb {

// Fluctuation-dissipation thermal displacement noise of one mode,
// single-sided: S_x(omega) = (4 k_B T / omega) * Im[-chi(omega)].
// For structural damping this reduces to the closed form
//   x(omega) = sqrt( 4 k_B T omega_m^2 /
//                    (omega m Q [(omega_m^2-omega^2)^2 + omega_m^4/Q^2]) ).
NoiseSpectrum mode_thermal_asd(const MechanicalMode& mode, double temperature_k,
                               const FrequencyGrid& grid);

// Quadrature sum over all modes, weighted by coupling_scale.
NoiseSpectrum total_thermal_asd(const MechanicalModel& model, double temperature_k,
                                const FrequencyGrid& grid);

// Band-integrated PSD ratio of b over a. Because thermal displacement PSD is
// proportional to temperature, a thermal-dominated band turns this into an
// inferred temperature ratio (the optical-heating thermometry check).
double infer_temperature_ratio(const NoiseSpectrum& asd_a, const NoiseSpectrum& asd_b,
                               Band band);

}  // namespace cnb
