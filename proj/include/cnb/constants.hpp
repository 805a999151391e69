#pragma once

// CODATA 2018 values, SI units throughout. These are compile-time constants
// on purpose: no configuration path may alter them.
namespace cnb::constants {

inline constexpr double k_B = 1.380649e-23;      // Boltzmann constant [J/K]
inline constexpr double hbar = 1.054571817e-34;  // reduced Planck constant [J s]
inline constexpr double c = 299792458.0;         // speed of light [m/s]

}  // namespace cnb::constants
