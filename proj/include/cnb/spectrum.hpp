#pragma once

#include <string>
#include <vector>

#include "cnb/params.hpp"

namespace cnb {

// Labeled single-sided amplitude spectral density over a frequency grid.
// Units are m/sqrt(Hz) unless a caller documents otherwise (the calibration
// module reuses the container for detector-referred spectra).
struct NoiseSpectrum {
  FrequencyGrid grid;
  std::vector<double> asd;
  std::string label;

  void validate() const;
};

NoiseSpectrum quadrature_sum(const std::vector<NoiseSpectrum>& parts, std::string label);

// Scales every ASD value; handy for counterfactuals and thermometry checks.
NoiseSpectrum scaled(const NoiseSpectrum& s, double factor);

// Log-log interpolation of `s` onto `grid`. Exact for power-law spectra.
// Throws if `grid` extends beyond the support of `s`.
NoiseSpectrum resample_loglog(const NoiseSpectrum& s, const FrequencyGrid& grid);

// ASD value at frequency f by log-log interpolation between grid points.
double asd_at(const NoiseSpectrum& s, double f_hz);

// Integral of the PSD (asd^2) over [band.first, band.second], trapezoidal on
// the grid with log-log interpolated band edges. Requires the band to lie
// inside the grid and to contain at least two grid points. Exactly additive
// over adjacent bands.
double band_psd_integral(const NoiseSpectrum& s, Band band);

}  // namespace cnb
