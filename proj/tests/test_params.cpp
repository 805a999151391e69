#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "cnb/config_io.hpp"

using namespace cnb;

namespace {
const std::filesystem::path kConfigDir = CNB_CONFIG_DIR;

CavityConfig paper_cavity() {
  CavityConfig c;
  c.length_m = 0.0097;
  c.wavelength_m = 1.064e-6;
  c.t_in = 250e-6;
  c.t_end = 50e-6;
  c.loss_rt = 1.833219467e-4;
  c.temperature_k = 295.0;
  return c;
}
}  // namespace

TEST_CASE("finesse formula consistency: F * total_loss == 2 pi") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(1e-6, 5e-3);
  for (int i = 0; i < 200; ++i) {
    CavityConfig c = paper_cavity();
    c.t_in = u(rng);
    c.t_end = u(rng);
    c.loss_rt = u(rng);
    CHECK(c.finesse() * c.total_loss() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  }
}

TEST_CASE("round-trip loss inferred for finesse 13000 is positive and reproduces it") {
  // Solving 2 pi / (300 ppm + loss_rt) = 13000 by hand gives 183.32 ppm.
  const double loss = 2.0 * std::numbers::pi / 13000.0 - 300e-6;
  CHECK(loss == doctest::Approx(1.833219467e-4).epsilon(1e-9));
  CHECK(loss > 0.0);
  CavityConfig c = paper_cavity();
  CHECK(c.finesse() == doctest::Approx(13000.0).epsilon(1e-9));
}

TEST_CASE("free spectral range for a 0.97 cm cavity") {
  CavityConfig c = paper_cavity();
  // c/(2L) = 299792458/0.0194
  CHECK(c.fsr_hz() == doctest::Approx(299792458.0 / 0.0194).epsilon(1e-15));
  CHECK(c.fsr_hz() == doctest::Approx(15.5e9).epsilon(0.01));
}

TEST_CASE("half linewidth: hand evaluation of c/(4 L F)") {
  CavityConfig c = paper_cavity();
  // F = 15000 at L = 1 cm: gamma = 299792458/600 Hz.
  c.length_m = 0.01;
  const double target_total = 2.0 * std::numbers::pi / 15000.0;
  c.loss_rt = target_total - c.t_in - c.t_end;
  CHECK(c.half_linewidth_hz() == doctest::Approx(499654.0966666667).epsilon(1e-12));
}

TEST_CASE("paper baseline half linewidth within 20% of 500 kHz") {
  CHECK(std::abs(paper_cavity().half_linewidth_hz() - 5e5) / 5e5 < 0.20);
}

TEST_CASE("increasing round-trip loss widens the linewidth") {
  CavityConfig c = paper_cavity();
  CavityConfig c2 = c;
  c2.loss_rt *= 2.0;
  CHECK(c2.half_linewidth_hz() > c.half_linewidth_hz());
}

TEST_CASE("kappa equals the HWHM in angular frequency") {
  CavityConfig c = paper_cavity();
  CHECK(c.kappa() ==
        doctest::Approx(2.0 * std::numbers::pi * c.half_linewidth_hz()).epsilon(1e-15));
  CHECK(c.kappa_in() + c.kappa_loss() == doctest::Approx(c.kappa()).epsilon(1e-15));
}

TEST_CASE("validation rejects bad configs naming the field") {
  CavityConfig c = paper_cavity();
  c.t_in = 0.0;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("t_in"), validation_error);
  c = paper_cavity();
  c.length_m = -1.0;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("length_m"), validation_error);
  c = paper_cavity();
  c.t_in = 0.6;
  c.t_end = 0.5;
  CHECK_THROWS_AS(c.validate(), validation_error);
}

TEST_CASE("mode and model invariants") {
  MechanicalMode m{"fundamental", 876.0, 16000.0, 5.5e-11, DampingLaw::structural, false};
  CHECK_NOTHROW(m.validate());
  m.quality = 0.0;
  CHECK_THROWS_AS(m.validate(), validation_error);

  MechanicalModel model;
  CHECK_THROWS_AS(model.validate(), validation_error);  // needs at least one mode
  model.modes = {MechanicalMode{"a", 1000.0, 100.0, 1e-9, DampingLaw::structural, false}};
  model.coupling_scale = {-0.5};
  CHECK_THROWS_WITH_AS(model.validate(), doctest::Contains("coupling_scale"), validation_error);
}

TEST_CASE("frequency grid invariants") {
  CHECK_THROWS_AS(FrequencyGrid{{}}.validate(), validation_error);
  CHECK_THROWS_AS(FrequencyGrid{{100.0, 100.0}}.validate(), validation_error);
  CHECK_THROWS_AS(FrequencyGrid{{-1.0, 10.0}}.validate(), validation_error);
  const FrequencyGrid g = FrequencyGrid::log_spaced(100.0, 1e6, 500.0);
  CHECK(g.size() == 2001);
  CHECK(g.f_hz.front() == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(g.f_hz.back() == doctest::Approx(1e6).epsilon(1e-15));
}

TEST_CASE("baseline config file loads with validated derived quantities") {
  const LoadedConfig cfg = load_config(kConfigDir / "baseline.json");
  CHECK(cfg.schema_version == 1);
  CHECK(cfg.cavity.finesse() == doctest::Approx(13000.0).epsilon(1e-8));
  CHECK(cfg.mechanics.modes.size() == 5);
  CHECK(cfg.mechanics.fundamental().name == "fundamental");
  CHECK(cfg.operating_points.size() == 4);
  // derived circulating powers reproduce the scan targets
  CHECK(cfg.find("p073").p_circ_w == doctest::Approx(0.073).epsilon(1e-8));
  CHECK(cfg.find("p220").p_circ_w == doctest::Approx(0.220).epsilon(1e-8));
  for (const auto& op : cfg.operating_points)
    CHECK(op.p_refl_w + op.p_trans_w <= op.p_in_w);
}

TEST_CASE("reserialized config reloads to identical derived quantities") {
  const auto tmp = std::filesystem::path(CNB_TEST_TMP);
  std::filesystem::create_directories(tmp);
  const LoadedConfig cfg = load_config(kConfigDir / "baseline.json");
  const auto copy_path = tmp / "roundtrip.json";
  {
    std::ofstream out(copy_path);
    out << serialize_config(cfg);
  }
  const LoadedConfig cfg2 = load_config(copy_path);
  CHECK(cfg2.cavity.finesse() == cfg.cavity.finesse());
  CHECK(cfg2.cavity.half_linewidth_hz() == cfg.cavity.half_linewidth_hz());
  CHECK(cfg2.cavity.fsr_hz() == cfg.cavity.fsr_hz());
  REQUIRE(cfg2.operating_points.size() == cfg.operating_points.size());
  for (std::size_t i = 0; i < cfg.operating_points.size(); ++i) {
    CHECK(cfg2.operating_points[i].p_circ_w == cfg.operating_points[i].p_circ_w);
    CHECK(cfg2.operating_points[i].p_refl_w == cfg.operating_points[i].p_refl_w);
  }
  CHECK(cfg2.mechanics.coupling_scale == cfg.mechanics.coupling_scale);
}

TEST_CASE("config loader reports violated invariants and parse errors") {
  const auto tmp = std::filesystem::path(CNB_TEST_TMP);
  std::filesystem::create_directories(tmp);

  const auto bad_value = tmp / "bad_value.json";
  {
    std::ofstream out(bad_value);
    out << R"({"schema_version":1,
      "cavity":{"length_m":0.0097,"wavelength_m":1.064e-6,"t_in":0.0,"t_end":50e-6,
                "loss_rt":1.8e-4,"temperature_k":295.0},
      "mechanics":{"modes":[{"name":"f","f_m_hz":876,"q":16000,"modal_mass_kg":5.5e-11,
                   "damping":"structural"}]},
      "noise":{"rin_per_sqrthz":0.0,"dark_asd_w_per_sqrthz":0.0}})";
  }
  CHECK_THROWS_WITH_AS(load_config(bad_value), doctest::Contains("t_in"), validation_error);

  const auto malformed = tmp / "malformed.json";
  {
    std::ofstream out(malformed);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_config(malformed), parse_error);

  const auto missing_key = tmp / "missing_key.json";
  {
    std::ofstream out(missing_key);
    out << R"({"schema_version":1,
      "cavity":{"length_m":0.0097,"wavelength_m":1.064e-6,"t_in":250e-6,"t_end":50e-6,
                "loss_rt":1.8e-4},
      "mechanics":{"modes":[{"name":"f","f_m_hz":876,"q":16000,"modal_mass_kg":5.5e-11,
                   "damping":"structural"}]},
      "noise":{"rin_per_sqrthz":0.0}})";
  }
  CHECK_THROWS_WITH_AS(load_config(missing_key), doctest::Contains("dark_asd_w_per_sqrthz"),
                       parse_error);
}
