#pragma once

#include <map>
#include <string>
#include <vector>

#include "cnb/quantum.hpp"
#include "cnb/spectrum.hpp"

namespace cnb {

// A set of component spectra on one shared grid plus their quadrature-sum
// total. total(f)^2 == sum of component(f)^2 at every grid point.
struct NoiseBudget {
  std::vector<NoiseSpectrum> components;
  NoiseSpectrum total;

  const NoiseSpectrum& component(const std::string& label) const;
};

NoiseBudget assemble_budget(std::vector<NoiseSpectrum> components);

// rms displacement over the band: sqrt(integral of asd^2 df).
double band_integrate(const NoiseSpectrum& spectrum, Band band);

// Band-integrated PSD shares per component; fractions sum to one.
struct BandStat {
  Band band;
  std::vector<std::string> labels;
  std::vector<double> rms_m;
  std::vector<double> fractions;  // PSD (power) shares of the band total
  double total_rms_m = 0.0;

  double fraction(const std::string& label) const;
  double rms(const std::string& label) const;
};

BandStat attribute(const NoiseBudget& budget, Band band);

// Least-squares slope of log(asd) vs log(f) over the band's grid points.
double fit_loglog_slope(const NoiseSpectrum& spectrum, Band band);

// Exponent alpha of y = C x^alpha through least squares on logs.
double fit_power_law_exponent(const std::vector<double>& x, const std::vector<double>& y);

// Free-mass standard quantum limit, asd = sqrt(2 hbar / (m omega^2)).
NoiseSpectrum sql_asd(double mass_kg, const FrequencyGrid& grid);

// Minimum of total/SQL over grid points inside the band; also reports where.
struct SqlProximity {
  double min_ratio = 0.0;
  double at_f_hz = 0.0;
};
SqlProximity sql_ratio(const NoiseBudget& budget, double mass_kg, Band band);

// Dominant (argmax PSD) component label at each grid point.
std::vector<std::string> dominance_map(const NoiseBudget& budget);

// Fraction of total band-point PSD carried by one component at the grid point
// nearest f_hz.
double psd_fraction_at(const NoiseBudget& budget, const std::string& label, double f_hz);

// Everything needed to build one operating point's budget.
struct BudgetInputs {
  CavityConfig config;
  MechanicalModel mechanics;
  NoiseParams noise;
};

// Components {thermal, qrpn, shot, dark, crpn} in the calibrated-displacement
// convention, assembled with their quadrature total.
NoiseBudget model_budget(const BudgetInputs& in, const OperatingPoint& op,
                         const FrequencyGrid& grid);

// Rebuilds operating point, spring and budget for each circulating power at
// fixed detuning, with band stats and the no-QRPN counterfactual.
struct PowerScanEntry {
  OperatingPoint op;
  NoiseBudget budget;
  BandStat stat;
  double spring_resonance_hz = 0.0;
  double counterfactual_total_rms_m = 0.0;  // band rms excluding QRPN
};

struct PowerScanResult {
  std::vector<PowerScanEntry> entries;
  double qrpn_rms_exponent = 0.0;  // band rms vs circulating power
  double crpn_rms_exponent = 0.0;
};

PowerScanResult power_scan(const BudgetInputs& in, double detuning_hwhm,
                           double detection_quadrature_rad,
                           const std::vector<double>& circulating_powers_w,
                           const FrequencyGrid& grid, Band band);

}  // namespace cnb
