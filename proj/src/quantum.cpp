#include "cnb/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnb {

namespace {

constexpr double pi = std::numbers::pi;

struct Rates {
  double kappa;       // total amplitude decay [rad/s]
  double kappa_in;    // coupler contribution
  double kappa_loss;  // lumped loss port (end mirror + round-trip loss)
  double delta;       // detuning [rad/s]
};

Rates rates(const CavityConfig& c, double detuning_hwhm) {
  Rates r;
  r.kappa = c.kappa();
  r.kappa_in = c.kappa_in();
  r.kappa_loss = c.kappa_loss();
  r.delta = detuning_hwhm * r.kappa;
  return r;
}

complex det_m(const Rates& r, double omega) {
  const complex p(r.kappa, -omega);
  return p * p + r.delta * r.delta;
}

// Intracavity photon number for a given circulating power.
double photon_number(const CavityConfig& c, double p_circ_w) {
  const double hw = constants::hbar * c.omega0();
  return 2.0 * c.length_m * p_circ_w / (hw * constants::c);
}

Mat2c m_inverse(const Rates& r, double omega) {
  const complex d = det_m(r, omega);
  const complex kiw(r.kappa, -omega);
  return Mat2c{{{kiw / d, -r.delta / d}, {r.delta / d, kiw / d}}};
}

// Phase of the reflected carrier relative to the (real) intracavity field.
double reflected_carrier_phase(const Rates& r) {
  const double re = 2.0 * r.kappa_in - r.kappa;
  if (re == 0.0 && r.delta == 0.0) return 0.0;  // dark port; phase is arbitrary
  return std::atan2(r.delta, re);
}

}  // namespace

OperatingPoint operating_point(const CavityConfig& config, double p_in_w, double detuning_hwhm,
                               double detection_quadrature_rad, const std::string& label) {
  config.validate();
  if (!(p_in_w >= 0.0)) throw validation_error("operating_point: p_in_w must be >= 0");
  const Rates r = rates(config, detuning_hwhm);
  const double k2d2 = r.kappa * r.kappa + r.delta * r.delta;
  // |a_cav|^2 = 2 kappa_in P_in / (kappa^2 + Delta^2); P_circ = |a|^2 c / 2L.
  const double buildup = 2.0 * r.kappa_in / k2d2 * constants::c / (2.0 * config.length_m);
  OperatingPoint op;
  op.label = label;
  op.p_in_w = p_in_w;
  op.detuning_hwhm = detuning_hwhm;
  op.detection_quadrature_rad = detection_quadrature_rad;
  op.p_circ_w = buildup * p_in_w;
  const double re = 2.0 * r.kappa_in - r.kappa;
  op.p_refl_w = p_in_w * (re * re + r.delta * r.delta) / k2d2;
  op.p_trans_w = config.t_end * op.p_circ_w;
  op.validate();
  return op;
}

double input_power_for_circulating(const CavityConfig& config, double p_circ_w,
                                   double detuning_hwhm) {
  const OperatingPoint unit = operating_point(config, 1.0, detuning_hwhm);
  return p_circ_w / unit.p_circ_w;
}

CavityTransfer cavity_transfer(const CavityConfig& config, const OperatingPoint& op,
                               double f_hz) {
  if (!(f_hz > 0.0)) throw std::domain_error("cavity_transfer: frequency must be > 0");
  const Rates r = rates(config, op.detuning_hwhm);
  const double omega = 2.0 * pi * f_hz;
  const Mat2c minv = m_inverse(r, omega);
  const double g = config.frequency_pull();
  const double n = photon_number(config, op.p_circ_w);

  CavityTransfer t;
  const double cin = std::sqrt(2.0 * r.kappa_in);
  const double closs = std::sqrt(2.0 * r.kappa_loss);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t.in_to_cav[i][j] = cin * minv[i][j];
      t.loss_to_cav[i][j] = closs * minv[i][j];
      t.in_to_refl[i][j] = cin * t.in_to_cav[i][j] - (i == j ? 1.0 : 0.0);
      t.loss_to_refl[i][j] = cin * t.loss_to_cav[i][j];
    }
  }
  // Force follows the intracavity amplitude quadrature:
  // dF = sqrt(2) hbar g sqrt(N) q1_cav.
  const double famp = std::sqrt(2.0) * constants::hbar * g * std::sqrt(n);
  for (int j = 0; j < 2; ++j) {
    t.force_per_in[j] = famp * t.in_to_cav[0][j];
    t.force_per_loss[j] = famp * t.loss_to_cav[0][j];
  }
  return t;
}

complex optical_spring(const CavityConfig& config, const OperatingPoint& op, double f_hz) {
  const Rates r = rates(config, op.detuning_hwhm);
  const double omega = 2.0 * pi * f_hz;
  const double g = config.frequency_pull();
  const double n = photon_number(config, op.p_circ_w);
  return 2.0 * constants::hbar * g * g * n * r.delta / det_m(r, omega);
}

double optical_spring_resonance_hz(const CavityConfig& config, const OperatingPoint& op,
                                   const MechanicalMode& mode) {
  // Coarse log scan from below the mechanical resonance to above the cavity
  // pole, then golden-section refinement of |1 + K chi|.
  auto objective = [&](double f) {
    return std::abs(1.0 + optical_spring(config, op, f) * susceptibility(mode, f));
  };
  const double f_lo = mode.f_m_hz * 0.5;
  const double f_hi = 20.0 * config.half_linewidth_hz();
  const int n_scan = 4000;
  double best_f = f_lo;
  double best_v = objective(f_lo);
  const double lr = std::log(f_hi / f_lo);
  for (int i = 1; i <= n_scan; ++i) {
    const double f = f_lo * std::exp(lr * i / n_scan);
    const double v = objective(f);
    if (v < best_v) {
      best_v = v;
      best_f = f;
    }
  }
  double a = best_f * std::exp(-lr / n_scan);
  double b = best_f * std::exp(lr / n_scan);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double v1 = objective(x1), v2 = objective(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-6 * best_f; ++it) {
    if (v1 < v2) {
      b = x2;
      x2 = x1;
      v2 = v1;
      x1 = b - gr * (b - a);
      v1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      v1 = v2;
      x2 = a + gr * (b - a);
      v2 = objective(x2);
    }
  }
  return 0.5 * (a + b);
}

double qrpn_force_psd(const CavityConfig& config, const OperatingPoint& op, double f_hz) {
  const Rates r = rates(config, op.detuning_hwhm);
  const double omega = 2.0 * pi * f_hz;
  const double g = config.frequency_pull();
  const double n = photon_number(config, op.p_circ_w);
  const double d2 = std::norm(det_m(r, omega));
  const double num = r.kappa * r.kappa + r.delta * r.delta + omega * omega;
  return 4.0 * constants::hbar * constants::hbar * g * g * n * r.kappa * num / d2;
}

NoiseSpectrum qrpn_displacement_asd(const CavityConfig& config, const OperatingPoint& op,
                                    const MechanicalMode& mode, const FrequencyGrid& grid,
                                    DisplacementConvention conv) {
  NoiseSpectrum out;
  out.grid = grid;
  out.label = "qrpn";
  out.asd.reserve(grid.size());
  for (double f : grid.f_hz) {
    const double sf = qrpn_force_psd(config, op, f);
    const Susceptibility chi = susceptibility(mode, f);
    if (conv == DisplacementConvention::physical) {
      const Susceptibility chi_eff = effective_susceptibility(chi, optical_spring(config, op, f));
      out.asd.push_back(std::abs(chi_eff) * std::sqrt(sf));
    } else {
      out.asd.push_back(std::abs(chi) * std::sqrt(sf));
    }
  }
  return out;
}

complex signal_plant(const CavityConfig& config, const OperatingPoint& op,
                     const MechanicalMode& mode, double f_hz) {
  const Rates r = rates(config, op.detuning_hwhm);
  const double omega = 2.0 * pi * f_hz;
  const complex d = det_m(r, omega);
  const double g = config.frequency_pull();
  const double n = photon_number(config, op.p_circ_w);

  // Reflected signal vector per unit physical displacement (cavity frame):
  // b = sqrt(4 kappa_in) g sqrt(N) * M^-1 (0,1)^T.
  const double amp = std::sqrt(4.0 * r.kappa_in) * g * std::sqrt(n);
  const Vec2c v{amp * (-r.delta) / d, amp * complex(r.kappa, -omega) / d};

  // Rotate into the reflected-carrier frame and project onto the homodyne angle.
  const double th = reflected_carrier_phase(r);
  const Vec2c w{std::cos(th) * v[0] + std::sin(th) * v[1],
                -std::sin(th) * v[0] + std::cos(th) * v[1]};
  const double z = op.detection_quadrature_rad;
  const complex projected = std::cos(z) * w[0] + std::sin(z) * w[1];

  // Refer to calibrated (free-resonator) displacement: physical motion per
  // calibrated displacement is 1/(1 + K chi).
  const complex closed_loop =
      1.0 + optical_spring(config, op, f_hz) * susceptibility(mode, f_hz);
  return projected / closed_loop;
}

ImprecisionSpectra shot_noise_displacement_asd(const CavityConfig& config,
                                               const OperatingPoint& op,
                                               const MechanicalMode& mode,
                                               const FrequencyGrid& grid,
                                               const NoiseParams& noise) {
  // Dark noise in vacuum-normalized quadrature units: a power fluctuation dP
  // on a carrier P corresponds to quadrature ASD dP / sqrt(2 hbar omega0 P).
  double dark_norm = 0.0;
  if (noise.dark_asd_w_per_sqrthz > 0.0) {
    if (!(op.p_refl_w > 0.0))
      throw validation_error(
          "shot_noise_displacement_asd: dark noise needs a nonzero reflected carrier");
    dark_norm = noise.dark_asd_w_per_sqrthz /
                std::sqrt(2.0 * constants::hbar * config.omega0() * op.p_refl_w);
  }
  ImprecisionSpectra out;
  out.shot.grid = grid;
  out.shot.label = "shot";
  out.dark.grid = grid;
  out.dark.label = "dark";
  out.shot.asd.reserve(grid.size());
  out.dark.asd.reserve(grid.size());
  for (double f : grid.f_hz) {
    const double inv_plant = 1.0 / std::abs(signal_plant(config, op, mode, f));
    out.shot.asd.push_back(inv_plant);  // readout vacuum has unit PSD
    out.dark.asd.push_back(dark_norm * inv_plant);
  }
  return out;
}

NoiseSpectrum classical_rpn_asd(const CavityConfig& config, const OperatingPoint& op,
                                const MechanicalMode& mode, double rin_per_sqrthz,
                                const FrequencyGrid& grid, DisplacementConvention conv) {
  const double gamma = config.half_linewidth_hz();
  const double f_amp = rin_per_sqrthz * 2.0 * op.p_circ_w / constants::c;
  NoiseSpectrum out;
  out.grid = grid;
  out.label = "crpn";
  out.asd.reserve(grid.size());
  for (double f : grid.f_hz) {
    const double pole = 1.0 / std::sqrt(1.0 + (f / gamma) * (f / gamma));
    const Susceptibility chi = susceptibility(mode, f);
    const Susceptibility resp =
        conv == DisplacementConvention::physical
            ? effective_susceptibility(chi, optical_spring(config, op, f))
            : chi;
    out.asd.push_back(std::abs(resp) * f_amp * pole);
  }
  return out;
}

}  // namespace cnb
