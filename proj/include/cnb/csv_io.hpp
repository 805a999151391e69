#pragma once

#include <filesystem>
#include <string>

#include "cnb/spectrum.hpp"

namespace cnb {

// Shortest round-trip decimal representation (the float-format contract for
// every artifact this tool writes).
std::string format_double(double v);

// Header: frequency_hz,asd_m_per_sqrthz  -- one row per grid point.
void write_spectrum_csv(const NoiseSpectrum& s, const std::filesystem::path& path);

// Accepts an optional third 'label' column. Errors carry the line number.
NoiseSpectrum read_spectrum_csv(const std::filesystem::path& path);

}  // namespace cnb
