#include "cnb/mechanics.hpp"

#include <numbers>
#include <stdexcept>

namespace cnb {

namespace {
void require_positive_frequency(double f_hz) {
  if (!(f_hz > 0.0)) throw std::domain_error("susceptibility: frequency must be > 0");
}
}  // namespace

Susceptibility structural_susceptibility(const MechanicalMode& mode, double f_hz) {
  require_positive_frequency(f_hz);
  const double w = 2.0 * std::numbers::pi * f_hz;
  const double wm = mode.omega_m();
  const std::complex<double> denom(wm * wm - w * w, wm * wm / mode.quality);
  return 1.0 / (mode.modal_mass_kg * denom);
}

Susceptibility viscous_susceptibility(const MechanicalMode& mode, double f_hz) {
  require_positive_frequency(f_hz);
  const double w = 2.0 * std::numbers::pi * f_hz;
  const double wm = mode.omega_m();
  const std::complex<double> denom(wm * wm - w * w, w * wm / mode.quality);
  return 1.0 / (mode.modal_mass_kg * denom);
}

Susceptibility susceptibility(const MechanicalMode& mode, double f_hz) {
  return mode.damping == DampingLaw::structural ? structural_susceptibility(mode, f_hz)
                                                : viscous_susceptibility(mode, f_hz);
}

Susceptibility effective_susceptibility(Susceptibility chi, std::complex<double> spring_k) {
  return chi / (1.0 + spring_k * chi);
}

}  // namespace cnb
