#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cnb/budget.hpp"

namespace cnb {

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Contents of one versioned config file: cavity, mechanics, noise inputs and
// the named operating points (stored as input power + detuning + readout
// quadrature; powers are re-derived on load).
struct LoadedConfig {
  int schema_version = 0;
  CavityConfig cavity;
  MechanicalModel mechanics;
  NoiseParams noise;
  std::vector<OperatingPoint> operating_points;

  const OperatingPoint& find(const std::string& label) const;
};

LoadedConfig load_config(const std::filesystem::path& path);

// Serializes back to the same schema; load(save(x)) reproduces every derived
// quantity exactly.
std::string serialize_config(const LoadedConfig& cfg);

}  // namespace cnb
