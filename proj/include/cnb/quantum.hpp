#pragma once

#include <array>
#include <complex>

#include "cnb/mechanics.hpp"
#include "cnb/spectrum.hpp"

namespace cnb {

// Single-longitudinal-mode input-output model of the detuned, lossy cavity in
// the two-photon (quadrature) formalism. All model conventions live here:
//
//  * Quadrature basis (q1, q2) = (amplitude, phase) in the frame where the
//    intracavity carrier is real. Single-sided PSDs; vacuum has unit PSD in
//    every quadrature.
//  * kappa = c*(T_in+T_end+loss_rt)/(4L) is the amplitude decay rate [rad/s]
//    and equals the HWHM linewidth in angular frequency. Detuning
//    Delta = detuning_hwhm * kappa. Positive detuning = laser above resonance;
//    cavity elongation increases the detuning; positive detuning gives a
//    positive (restoring) optical spring.
//  * Two input ports: the coupler (kappa_in) and one lumped loss port
//    (kappa_loss = kappa_end + kappa_rt) through which vacuum enters.
//  * Intracavity response matrix M(Omega) = [[k-iW,  D], [-D,  k-iW]] acting
//    on (q1,q2); mirror motion drives the phase quadrature.
//  * Readout: homodyne of the reflected port at angle zeta measured from the
//    reflected carrier's amplitude quadrature (zeta = 0 is direct detection).
//  * Displacement spectra come in two conventions. "physical" is the actual
//    mirror motion, |chi_eff| * sqrt(S_F). "calibrated" is the equivalent
//    free-resonator displacement, |chi| * sqrt(S_F): the quantity a
//    frequency-injection calibration of the error signal yields, because the
//    injection passes through the same closed loop as the signal. Budgets and
//    all band analyses use the calibrated convention; the two are related by
//    the identity chi_eff * (1 + K chi) = chi.
//  * The lock servo's in-band suppression 1/(1+G) multiplies signal and
//    detector noise alike, so it cancels from every calibrated spectrum; it
//    appears only in the raw error-signal synthesis (calibration module).

using complex = std::complex<double>;

// Column-major-free tiny 2x2 complex matrix: m[row][col].
using Mat2c = std::array<std::array<complex, 2>, 2>;
using Vec2c = std::array<complex, 2>;

// Steady-state carrier solution. Buildup is Lorentzian in the detuning:
// P_circ(delta) = P_circ(0) / (1 + delta^2) with P_circ(0)/P_in = 4 T_in/T_tot^2.
OperatingPoint operating_point(const CavityConfig& config, double p_in_w, double detuning_hwhm,
                               double detection_quadrature_rad = 0.0,
                               const std::string& label = "");

// Input power that builds the requested circulating power at this detuning.
double input_power_for_circulating(const CavityConfig& config, double p_circ_w,
                                   double detuning_hwhm);

// Sideband transfer at one frequency: port-to-reflection and port-to-cavity
// matrices plus the radiation-pressure force response to each port's
// quadrature pair [N per unit input quadrature ASD].
struct CavityTransfer {
  Mat2c in_to_refl;
  Mat2c in_to_cav;
  Mat2c loss_to_refl;
  Mat2c loss_to_cav;
  Vec2c force_per_in;
  Vec2c force_per_loss;
};

CavityTransfer cavity_transfer(const CavityConfig& config, const OperatingPoint& op, double f_hz);

// Complex optical spring constant K(f) [N/m]:
// K = 2 hbar g^2 N Delta / ((kappa - i Omega)^2 + Delta^2).
complex optical_spring(const CavityConfig& config, const OperatingPoint& op, double f_hz);

// Frequency minimizing |1 + K(f) chi(f)| for the given mode; the closed-loop
// (optical-spring) resonance.
double optical_spring_resonance_hz(const CavityConfig& config, const OperatingPoint& op,
                                   const MechanicalMode& mode);

// Radiation-pressure force PSD from vacuum entering both ports [N^2/Hz]:
// S_F = 4 hbar^2 g^2 N kappa (kappa^2 + Delta^2 + Omega^2) / |det M|^2.
// Independent of the detection quadrature.
double qrpn_force_psd(const CavityConfig& config, const OperatingPoint& op, double f_hz);

enum class DisplacementConvention { physical, calibrated };

NoiseSpectrum qrpn_displacement_asd(const CavityConfig& config, const OperatingPoint& op,
                                    const MechanicalMode& mode, const FrequencyGrid& grid,
                                    DisplacementConvention conv = DisplacementConvention::calibrated);

// Plant transfer from calibrated displacement to the detected quadrature, in
// vacuum-normalized units per meter. Includes the cavity response, the
// reflected-carrier rotation, the homodyne projection and the optical-spring
// loop; excludes the servo factor 1/(1+G), which cancels from referred noise.
complex signal_plant(const CavityConfig& config, const OperatingPoint& op,
                     const MechanicalMode& mode, double f_hz);

// Imprecision noise referred to calibrated displacement: readout vacuum and
// dark noise divided by |signal_plant|. Returned as separately labeled
// spectra {shot, dark}.
struct ImprecisionSpectra {
  NoiseSpectrum shot;
  NoiseSpectrum dark;
};

ImprecisionSpectra shot_noise_displacement_asd(const CavityConfig& config,
                                               const OperatingPoint& op,
                                               const MechanicalMode& mode,
                                               const FrequencyGrid& grid,
                                               const NoiseParams& noise);

// Classical radiation pressure noise from residual intensity noise:
// force ASD = rin * (2 P_circ / c), low-passed at the cavity pole.
NoiseSpectrum classical_rpn_asd(const CavityConfig& config, const OperatingPoint& op,
                                const MechanicalMode& mode, double rin_per_sqrthz,
                                const FrequencyGrid& grid,
                                DisplacementConvention conv = DisplacementConvention::calibrated);

}  // namespace cnb
