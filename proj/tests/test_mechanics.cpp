#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cnb/mechanics.hpp"

using namespace cnb;

namespace {
MechanicalMode fundamental(DampingLaw law = DampingLaw::structural) {
  return MechanicalMode{"fundamental", 876.0, 16000.0, 5.5e-11, law, false};
}
}  // namespace

TEST_CASE("static compliance limit: |chi| -> 1/(m omega_m^2) as f -> 0+") {
  const MechanicalMode m = fundamental();
  const double expected = 1.0 / (m.modal_mass_kg * m.omega_m() * m.omega_m());
  CHECK(std::abs(structural_susceptibility(m, m.f_m_hz * 1e-5)) ==
        doctest::Approx(expected).epsilon(1e-8));
  CHECK(std::abs(viscous_susceptibility(m, m.f_m_hz * 1e-5)) ==
        doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("resonance amplification: |chi(f_m)| = Q/(m omega_m^2)") {
  const MechanicalMode m = fundamental();
  const double expected = m.quality / (m.modal_mass_kg * m.omega_m() * m.omega_m());
  CHECK(std::abs(structural_susceptibility(m, m.f_m_hz)) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(viscous_susceptibility(m, m.f_m_hz)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("both damping laws agree at resonance within 1/(2Q) relative") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> fdist(10.0, 1e6), qdist(10.0, 1e5);
  for (int i = 0; i < 100; ++i) {
    MechanicalMode m{"m", fdist(rng), qdist(rng), 1e-10, DampingLaw::structural, false};
    const double a = std::abs(structural_susceptibility(m, m.f_m_hz));
    const double b = std::abs(viscous_susceptibility(m, m.f_m_hz));
    CHECK(std::abs(a / b - 1.0) < 1.0 / (2.0 * m.quality));
  }
}

TEST_CASE("omega^-2 falloff above resonance") {
  const MechanicalMode m = fundamental();
  const double r = std::abs(structural_susceptibility(m, 10.0 * m.f_m_hz)) /
                   std::abs(structural_susceptibility(m, 100.0 * m.f_m_hz));
  CHECK(r == doctest::Approx(1e4).epsilon(0.01));
}

TEST_CASE("viscous dissipation scales as omega^-3 well above resonance") {
  const MechanicalMode m = fundamental(DampingLaw::viscous);
  const double i1 = -viscous_susceptibility(m, 100.0 * m.f_m_hz).imag();
  const double i2 = -viscous_susceptibility(m, 1000.0 * m.f_m_hz).imag();
  CHECK(i1 / i2 == doctest::Approx(1e3).epsilon(0.01));
}

TEST_CASE("lossless limit: viscous chi becomes real as Q -> infinity") {
  MechanicalMode m = fundamental(DampingLaw::viscous);
  m.quality = 1e12;
  const double f = 3.0 * m.f_m_hz;
  const Susceptibility chi = viscous_susceptibility(m, f);
  const double w = 2.0 * std::numbers::pi * f;
  const double expected = 1.0 / (m.modal_mass_kg * (m.omega_m() * m.omega_m() - w * w));
  CHECK(chi.real() == doctest::Approx(expected).epsilon(1e-9));
  CHECK(std::abs(chi.imag()) < 1e-9 * std::abs(chi.real()));
}

TEST_CASE("magnitudes of the two laws converge at high frequency") {
  const MechanicalMode ms = fundamental(DampingLaw::structural);
  const MechanicalMode mv = fundamental(DampingLaw::viscous);
  const double f = 1e4 * ms.f_m_hz;
  CHECK(std::abs(structural_susceptibility(ms, f)) / std::abs(viscous_susceptibility(mv, f)) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("Im(chi) <= 0 for all f > 0 under both laws") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> fdist(1.0, 1e7), qdist(1.0, 1e6),
      fmdist(10.0, 1e6);
  for (int i = 0; i < 500; ++i) {
    MechanicalMode m{"m", fmdist(rng), qdist(rng), 1e-10, DampingLaw::structural, false};
    const double f = fdist(rng);
    CHECK(structural_susceptibility(m, f).imag() <= 0.0);
    CHECK(viscous_susceptibility(m, f).imag() <= 0.0);
  }
}

TEST_CASE("frequency must be positive") {
  CHECK_THROWS_AS(structural_susceptibility(fundamental(), 0.0), std::domain_error);
  CHECK_THROWS_AS(viscous_susceptibility(fundamental(), -5.0), std::domain_error);
}

TEST_CASE("effective susceptibility with K = 0 is bit-identical") {
  const MechanicalMode m = fundamental();
  for (double f : {10.0, 876.0, 2.5e4, 9.9e5}) {
    const Susceptibility chi = susceptibility(m, f);
    const Susceptibility eff = effective_susceptibility(chi, {0.0, 0.0});
    CHECK(eff.real() == chi.real());
    CHECK(eff.imag() == chi.imag());
  }
}

TEST_CASE("real positive spring shifts the resonance to sqrt(f_m^2 + K/(4 pi^2 m))") {
  const MechanicalMode m = fundamental();
  const double K = 63.0;  // N/m, a few tens like the detuned-cavity spring
  const double f_expected = std::sqrt(m.f_m_hz * m.f_m_hz +
                                      K / (4.0 * std::numbers::pi * std::numbers::pi *
                                           m.modal_mass_kg));
  // locate min |1 + K chi| by scan
  double best_f = 0.0, best_v = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    const double f = 100.0 * std::pow(10.0, 4.0 * i / 200000.0);
    const double v = std::abs(1.0 + K * susceptibility(m, f));
    if (v < best_v) {
      best_v = v;
      best_f = f;
    }
  }
  CHECK(best_f == doctest::Approx(f_expected).epsilon(1e-3));
}
