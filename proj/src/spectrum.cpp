#include "cnb/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace cnb {

void NoiseSpectrum::validate() const {
  grid.validate();
  if (asd.size() != grid.size())
    throw validation_error("spectrum '" + label + "': asd length must match the grid");
  for (double v : asd) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw validation_error("spectrum '" + label + "': asd values must be finite and >= 0");
  }
}

NoiseSpectrum quadrature_sum(const std::vector<NoiseSpectrum>& parts, std::string label) {
  if (parts.empty()) throw validation_error("quadrature_sum: no spectra given");
  for (const auto& p : parts) {
    if (!(p.grid == parts.front().grid))
      throw validation_error("quadrature_sum: spectrum '" + p.label +
                             "' is on a different grid than '" + parts.front().label + "'");
  }
  NoiseSpectrum out;
  out.grid = parts.front().grid;
  out.label = std::move(label);
  out.asd.assign(out.grid.size(), 0.0);
  for (std::size_t i = 0; i < out.asd.size(); ++i) {
    double s2 = 0.0;
    for (const auto& p : parts) s2 += p.asd[i] * p.asd[i];
    out.asd[i] = std::sqrt(s2);
  }
  return out;
}

NoiseSpectrum scaled(const NoiseSpectrum& s, double factor) {
  NoiseSpectrum out = s;
  for (double& v : out.asd) v *= factor;
  return out;
}

double asd_at(const NoiseSpectrum& s, double f_hz) {
  const auto& f = s.grid.f_hz;
  if (f_hz < f.front() || f_hz > f.back())
    throw validation_error("asd_at: frequency " + std::to_string(f_hz) +
                           " Hz is outside the grid");
  auto hi = std::lower_bound(f.begin(), f.end(), f_hz);
  if (hi == f.begin()) return s.asd.front();
  const auto j = static_cast<std::size_t>(hi - f.begin());
  if (j == f.size()) return s.asd.back();
  const double f0 = f[j - 1], f1 = f[j];
  const double a0 = s.asd[j - 1], a1 = s.asd[j];
  const double t = std::log(f_hz / f0) / std::log(f1 / f0);
  if (a0 > 0.0 && a1 > 0.0) return std::exp((1.0 - t) * std::log(a0) + t * std::log(a1));
  return (1.0 - t) * a0 + t * a1;
}

double band_psd_integral(const NoiseSpectrum& s, Band band) {
  const auto& f = s.grid.f_hz;
  if (!(band.first < band.second))
    throw validation_error("band [" + std::to_string(band.first) + ", " +
                           std::to_string(band.second) + "] Hz is empty or inverted");
  if (band.first < f.front() || band.second > f.back())
    throw validation_error("band [" + std::to_string(band.first) + ", " +
                           std::to_string(band.second) + "] Hz lies outside the grid");
  auto lo = std::lower_bound(f.begin(), f.end(), band.first);
  auto hi = std::upper_bound(f.begin(), f.end(), band.second);
  const auto i0 = static_cast<std::size_t>(lo - f.begin());
  const auto i1 = static_cast<std::size_t>(hi - f.begin());  // one past the last inside point
  if (i1 - i0 < 2)
    throw validation_error("band [" + std::to_string(band.first) + ", " +
                           std::to_string(band.second) +
                           "] Hz contains fewer than two grid points");
  auto psd = [&](std::size_t i) { return s.asd[i] * s.asd[i]; };
  double integral = 0.0;
  // edge panels against interpolated band-edge values
  {
    const double a = asd_at(s, band.first);
    integral += 0.5 * (a * a + psd(i0)) * (f[i0] - band.first);
    const double b = asd_at(s, band.second);
    integral += 0.5 * (psd(i1 - 1) + b * b) * (band.second - f[i1 - 1]);
  }
  for (std::size_t i = i0; i + 1 < i1; ++i)
    integral += 0.5 * (psd(i) + psd(i + 1)) * (f[i + 1] - f[i]);
  return integral;
}

NoiseSpectrum resample_loglog(const NoiseSpectrum& s, const FrequencyGrid& grid) {
  s.validate();
  grid.validate();
  const auto& f = s.grid.f_hz;
  if (grid.f_hz.front() < f.front() || grid.f_hz.back() > f.back())
    throw validation_error("resample: target grid extends beyond the spectrum's range [" +
                           std::to_string(f.front()) + ", " + std::to_string(f.back()) + "] Hz");
  NoiseSpectrum out;
  out.grid = grid;
  out.label = s.label;
  out.asd.reserve(grid.size());
  for (double ft : grid.f_hz) {
    auto hi = std::lower_bound(f.begin(), f.end(), ft);
    if (hi == f.begin()) {
      out.asd.push_back(s.asd.front());
      continue;
    }
    const auto j = static_cast<std::size_t>(hi - f.begin());
    if (j == f.size()) {
      out.asd.push_back(s.asd.back());
      continue;
    }
    const double f0 = f[j - 1], f1 = f[j];
    const double a0 = s.asd[j - 1], a1 = s.asd[j];
    const double t = std::log(ft / f0) / std::log(f1 / f0);
    // Power-law interpolation; fall back to linear when a zero forbids logs.
    if (a0 > 0.0 && a1 > 0.0) {
      out.asd.push_back(std::exp((1.0 - t) * std::log(a0) + t * std::log(a1)));
    } else {
      out.asd.push_back((1.0 - t) * a0 + t * a1);
    }
  }
  return out;
}

}  // namespace cnb
