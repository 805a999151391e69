#pragma once

#include <complex>

#include "cnb/params.hpp"

namespace cnb {

// Complex mechanical compliance chi(omega) [m/N].
//
// Sign convention: chi = 1/(m (omega_m^2 - omega^2 + i*dissipation)) with the
// dissipation term positive, so Im(chi) <= 0 for all f > 0 under both damping
// laws, and an optical spring K enters as series feedback,
// chi_eff = chi / (1 + K chi).
using Susceptibility = std::complex<double>;

// Structural (internal friction) damping: dissipation = omega_m^2 / Q,
// frequency independent loss angle.
Susceptibility structural_susceptibility(const MechanicalMode& mode, double f_hz);

// Viscous (velocity) damping: dissipation = omega * omega_m / Q.
Susceptibility viscous_susceptibility(const MechanicalMode& mode, double f_hz);

// Dispatch on the mode's configured damping law.
Susceptibility susceptibility(const MechanicalMode& mode, double f_hz);

// Closed-loop response with an optical spring K(f) [N/m] acting in series.
Susceptibility effective_susceptibility(Susceptibility chi, std::complex<double> spring_k);

}  // namespace cnb
