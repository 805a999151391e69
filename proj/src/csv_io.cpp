#include "cnb/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cnb/config_io.hpp"

namespace cnb {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_spectrum_csv(const NoiseSpectrum& s, const std::filesystem::path& path) {
  s.validate();
  std::ofstream out(path, std::ios::binary);  // binary: byte-identical across platforms
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out << "frequency_hz,asd_m_per_sqrthz\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i)
    out << format_double(s.grid.f_hz[i]) << ',' << format_double(s.asd[i]) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

double parse_field(const std::string& field, std::size_t line, const std::string& path) {
  double v = 0.0;
  const char* b = field.data();
  const char* e = b + field.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e)
    throw parse_error(path + ":" + std::to_string(line) + ": cannot parse number '" + field + "'");
  return v;
}

}  // namespace

NoiseSpectrum read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spectrum file: " + path.string());
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw parse_error(path.string() + ": empty file");
  ++lineno;
  if (line.rfind("frequency_hz,asd_m_per_sqrthz", 0) != 0)
    throw parse_error(path.string() + ":1: header must start with 'frequency_hz,asd_m_per_sqrthz'");

  NoiseSpectrum s;
  s.label = path.stem().string();
  double prev = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f_field, a_field, label_field;
    if (!std::getline(ss, f_field, ',') || !std::getline(ss, a_field, ','))
      throw parse_error(path.string() + ":" + std::to_string(lineno) + ": expected 'frequency,asd'");
    if (std::getline(ss, label_field, ',') && !label_field.empty()) s.label = label_field;
    const double f = parse_field(f_field, lineno, path.string());
    const double a = parse_field(a_field, lineno, path.string());
    if (!(f > prev))
      throw parse_error(path.string() + ":" + std::to_string(lineno) +
                        ": frequency column must be strictly increasing");
    if (!(a >= 0.0))
      throw parse_error(path.string() + ":" + std::to_string(lineno) + ": negative asd value");
    prev = f;
    s.grid.f_hz.push_back(f);
    s.asd.push_back(a);
  }
  s.validate();
  return s;
}

}  // namespace cnb
