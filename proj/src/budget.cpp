#include "cnb/budget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cnb/thermal.hpp"

namespace cnb {

const NoiseSpectrum& NoiseBudget::component(const std::string& label) const {
  for (const auto& c : components)
    if (c.label == label) return c;
  throw validation_error("budget has no component labeled '" + label + "'");
}

NoiseBudget assemble_budget(std::vector<NoiseSpectrum> components) {
  NoiseBudget b;
  b.total = quadrature_sum(components, "total");
  b.components = std::move(components);
  return b;
}

double band_integrate(const NoiseSpectrum& spectrum, Band band) {
  return std::sqrt(band_psd_integral(spectrum, band));
}

double BandStat::fraction(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return fractions[i];
  throw validation_error("band stat has no component labeled '" + label + "'");
}

double BandStat::rms(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return rms_m[i];
  throw validation_error("band stat has no component labeled '" + label + "'");
}

BandStat attribute(const NoiseBudget& budget, Band band) {
  BandStat st;
  st.band = band;
  double total_power = 0.0;
  for (const auto& c : budget.components) {
    const double p = band_psd_integral(c, band);
    st.labels.push_back(c.label);
    st.rms_m.push_back(std::sqrt(p));
    st.fractions.push_back(p);
    total_power += p;
  }
  if (!(total_power > 0.0)) throw validation_error("attribute: band has zero total power");
  for (double& f : st.fractions) f /= total_power;
  st.total_rms_m = std::sqrt(total_power);
  return st;
}

double fit_loglog_slope(const NoiseSpectrum& spectrum, Band band) {
  const auto& f = spectrum.grid.f_hz;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= band.first && f[i] <= band.second) {
      if (!(spectrum.asd[i] > 0.0))
        throw validation_error("fit_loglog_slope: zero asd inside the band");
      lx.push_back(std::log(f[i]));
      ly.push_back(std::log(spectrum.asd[i]));
    }
  }
  if (lx.size() < 3)
    throw validation_error("fit_loglog_slope: band [" + std::to_string(band.first) + ", " +
                           std::to_string(band.second) + "] Hz has fewer than 3 grid points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double fit_power_law_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw validation_error("fit_power_law_exponent: need >= 2 matching samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

NoiseSpectrum sql_asd(double mass_kg, const FrequencyGrid& grid) {
  if (!(mass_kg > 0.0)) throw validation_error("sql_asd: mass must be > 0");
  NoiseSpectrum out;
  out.grid = grid;
  out.label = "sql";
  out.asd.reserve(grid.size());
  for (double f : grid.f_hz) {
    const double w = 2.0 * std::numbers::pi * f;
    out.asd.push_back(std::sqrt(2.0 * constants::hbar / (mass_kg * w * w)));
  }
  return out;
}

SqlProximity sql_ratio(const NoiseBudget& budget, double mass_kg, Band band) {
  const NoiseSpectrum sql = sql_asd(mass_kg, budget.total.grid);
  SqlProximity best;
  best.min_ratio = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < budget.total.grid.size(); ++i) {
    const double f = budget.total.grid.f_hz[i];
    if (f < band.first || f > band.second) continue;
    const double r = budget.total.asd[i] / sql.asd[i];
    any = true;
    if (r < best.min_ratio) {
      best.min_ratio = r;
      best.at_f_hz = f;
    }
  }
  if (!any) throw validation_error("sql_ratio: no grid points inside the band");
  return best;
}

std::vector<std::string> dominance_map(const NoiseBudget& budget) {
  std::vector<std::string> out;
  out.reserve(budget.total.grid.size());
  for (std::size_t i = 0; i < budget.total.grid.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < budget.components.size(); ++c) {
      if (budget.components[c].asd[i] > budget.components[best].asd[i]) best = c;
    }
    out.push_back(budget.components[best].label);
  }
  return out;
}

double psd_fraction_at(const NoiseBudget& budget, const std::string& label, double f_hz) {
  const auto& f = budget.total.grid.f_hz;
  auto it = std::lower_bound(f.begin(), f.end(), f_hz);
  std::size_t i = static_cast<std::size_t>(it - f.begin());
  if (i == f.size()) i = f.size() - 1;
  if (i > 0 && std::abs(f[i - 1] - f_hz) < std::abs(f[i] - f_hz)) --i;
  const double c = budget.component(label).asd[i];
  const double t = budget.total.asd[i];
  if (!(t > 0.0)) throw validation_error("psd_fraction_at: zero total at the requested point");
  return c * c / (t * t);
}

NoiseBudget model_budget(const BudgetInputs& in, const OperatingPoint& op,
                         const FrequencyGrid& grid) {
  in.config.validate();
  in.mechanics.validate();
  in.noise.validate();
  const MechanicalMode& fund = in.mechanics.fundamental();
  std::vector<NoiseSpectrum> parts;
  parts.push_back(total_thermal_asd(in.mechanics, in.config.temperature_k, grid));
  parts.push_back(qrpn_displacement_asd(in.config, op, fund, grid));
  ImprecisionSpectra imp = shot_noise_displacement_asd(in.config, op, fund, grid, in.noise);
  parts.push_back(std::move(imp.shot));
  parts.push_back(std::move(imp.dark));
  parts.push_back(classical_rpn_asd(in.config, op, fund, in.noise.rin_per_sqrthz, grid));
  return assemble_budget(std::move(parts));
}

PowerScanResult power_scan(const BudgetInputs& in, double detuning_hwhm,
                           double detection_quadrature_rad,
                           const std::vector<double>& circulating_powers_w,
                           const FrequencyGrid& grid, Band band) {
  if (circulating_powers_w.empty())
    throw validation_error("power_scan: need at least one circulating power");
  PowerScanResult result;
  std::vector<double> powers, qrpn_rms, crpn_rms;
  for (std::size_t k = 0; k < circulating_powers_w.size(); ++k) {
    const double p_circ = circulating_powers_w[k];
    const double p_in = input_power_for_circulating(in.config, p_circ, detuning_hwhm);
    PowerScanEntry e;
    e.op = operating_point(in.config, p_in, detuning_hwhm, detection_quadrature_rad,
                           "scan_" + std::to_string(k));
    e.budget = model_budget(in, e.op, grid);
    e.stat = attribute(e.budget, band);
    e.spring_resonance_hz =
        optical_spring_resonance_hz(in.config, e.op, in.mechanics.fundamental());
    // counterfactual: total noise without the QRPN contribution
    std::vector<NoiseSpectrum> others;
    for (const auto& c : e.budget.components)
      if (c.label != "qrpn") others.push_back(c);
    e.counterfactual_total_rms_m =
        band_integrate(quadrature_sum(others, "total_no_qrpn"), band);
    powers.push_back(p_circ);
    qrpn_rms.push_back(e.stat.rms("qrpn"));
    crpn_rms.push_back(e.stat.rms("crpn"));
    result.entries.push_back(std::move(e));
  }
  if (powers.size() >= 2) {
    result.qrpn_rms_exponent = fit_power_law_exponent(powers, qrpn_rms);
    result.crpn_rms_exponent = fit_power_law_exponent(powers, crpn_rms);
  }
  return result;
}

}  // namespace cnb
