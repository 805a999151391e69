#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnb/constants.hpp"

namespace cnb {

// Thrown whenever a configured value violates a documented invariant.
// The message names the offending field.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

enum class DampingLaw { structural, viscous };

std::string to_string(DampingLaw law);
DampingLaw damping_from_string(const std::string& s);

// One mechanical resonance of the microresonator.
struct MechanicalMode {
  std::string name;
  double f_m_hz = 0.0;        // resonance frequency [Hz]
  double quality = 0.0;       // quality factor Q = 1/phi
  double modal_mass_kg = 0.0; // effective mass sensed at the optical spot [kg]
  DampingLaw damping = DampingLaw::structural;
  bool uncertain = false;     // marks placeholder values not pinned by measurement

  double omega_m() const { return 2.0 * std::numbers::pi * f_m_hz; }
  void validate() const;
};

// Modal decomposition plus per-mode displacement coupling factors.
// coupling_scale multiplies each mode's displacement ASD contribution; it is
// the knob for power-dependent mode coupling (beam-spot walk under radiation
// torque), not a physical model of it.
struct MechanicalModel {
  std::vector<MechanicalMode> modes;
  std::vector<double> coupling_scale;  // same length as modes, >= 0

  const MechanicalMode& fundamental() const { return modes.front(); }
  void validate() const;
};

// Fabry-Perot cavity geometry and optical parameters.
//
// Detuning sign convention (used everywhere in this codebase): positive
// detuning means the laser sits above the cavity resonance, a mirror
// displacement that lengthens the cavity increases the detuning, and a
// positive detuning produces a positive (stiffening) optical spring.
struct CavityConfig {
  double length_m = 0.0;      // cavity length [m]
  double wavelength_m = 0.0;  // laser wavelength [m]
  double t_in = 0.0;          // input coupler power transmission
  double t_end = 0.0;         // end mirror power transmission
  double loss_rt = 0.0;       // round-trip power loss (all other losses folded in)
  double temperature_k = 295.0;

  double total_loss() const { return t_in + t_end + loss_rt; }
  double finesse() const { return 2.0 * std::numbers::pi / total_loss(); }
  double fsr_hz() const { return constants::c / (2.0 * length_m); }
  // Half linewidth (HWHM) in Hz; equals c/(4 L F).
  double half_linewidth_hz() const { return fsr_hz() / (2.0 * finesse()); }
  // Amplitude decay rate [rad/s]; the HWHM in angular frequency.
  double kappa() const { return constants::c * total_loss() / (4.0 * length_m); }
  double kappa_in() const { return constants::c * t_in / (4.0 * length_m); }
  double kappa_loss() const { return kappa() - kappa_in(); }
  double omega0() const { return 2.0 * std::numbers::pi * constants::c / wavelength_m; }
  // Frequency pull of the resonance per unit mirror displacement [rad/(s m)].
  double frequency_pull() const { return omega0() / length_m; }

  void validate() const;
};

// Static state of the locked cavity at one input power and detuning.
struct OperatingPoint {
  std::string label;
  double p_in_w = 0.0;
  double detuning_hwhm = 0.0;  // detuning in units of the HWHM linewidth
  double p_circ_w = 0.0;
  double p_refl_w = 0.0;
  double p_trans_w = 0.0;
  double detection_quadrature_rad = 0.0;  // homodyne angle of the reflected-port
                                          // readout, relative to the reflected
                                          // carrier's amplitude quadrature

  void validate() const;
};

// Classical noise inputs. Both are artifact-level config values, not derived.
struct NoiseParams {
  double rin_per_sqrthz = 0.0;        // residual relative intensity noise [1/sqrt(Hz)], flat
  double dark_asd_w_per_sqrthz = 0.0; // detector dark noise referred to detected power [W/sqrt(Hz)], flat

  void validate() const;
};

// Strictly increasing list of positive frequencies [Hz].
struct FrequencyGrid {
  std::vector<double> f_hz;

  static FrequencyGrid log_spaced(double f_min_hz, double f_max_hz, double points_per_decade);

  std::size_t size() const { return f_hz.size(); }
  void validate() const;
  bool operator==(const FrequencyGrid&) const = default;
};

// Frequency band [first, second] in Hz.
using Band = std::pair<double, double>;

}  // namespace cnb
