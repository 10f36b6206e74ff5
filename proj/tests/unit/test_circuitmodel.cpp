#include <doctest.h>

#include <cmath>

#include "tiltbeam/circuitmodel.hpp"
#include "tiltbeam/constants.hpp"
#include "tiltbeam/errors.hpp"

using namespace tiltbeam;

namespace {

MicrostripSpec strip_with(double eps_r, double width, double height) {
  MicrostripSpec s;
  s.substrate.eps_r = eps_r;
  s.substrate.thickness = height;
  s.width = width;
  return s;
}

// Hammerstad-Jensen quasi-static model, only as a loose cross-check.
double hammerstad_eps_eff(double er, double u) {
  const double a = 1.0 + std::log((std::pow(u, 4) + std::pow(u / 52.0, 2)) / (std::pow(u, 4) + 0.432)) / 49.0 +
                   std::log(1.0 + std::pow(u / 18.1, 3)) / 18.7;
  const double b = 0.564 * std::pow((er - 0.9) / (er + 3.0), 0.053);
  return (er + 1.0) / 2.0 + (er - 1.0) / 2.0 * std::pow(1.0 + 10.0 / u, -a * b);
}

}  // namespace

TEST_CASE("effective permittivity") {
  const MicrostripSpec table;  // 0.24 mm on 0.1 mm FR4
  const double e = effective_permittivity(table);
  CHECK(e == doctest::Approx(3.447900286608902).epsilon(1e-14));
  CHECK(e > 2.8);
  CHECK(e < 3.6);
  CHECK(std::fabs(e - hammerstad_eps_eff(4.4, 2.4)) < 0.1);

  CHECK(effective_permittivity(strip_with(1.0, 0.24e-3, 0.1e-3)) == 1.0);
  CHECK(effective_permittivity(strip_with(4.4, 10e-3, 0.1e-3)) == doctest::Approx(4.4).epsilon(0.02));

  double last = 1.0;
  for (double u = 0.05; u < 200.0; u *= 1.3) {
    const double v = effective_permittivity(strip_with(4.4, u * 0.1e-3, 0.1e-3));
    CHECK(v > last);
    CHECK(v <= 4.4);
    last = v;
  }
}

TEST_CASE("half-wave resonance") {
  CHECK(half_wave_resonance(kSpeedOfLight / 2e9, 1.0) == doctest::Approx(1e9).epsilon(1e-15));
  CHECK(half_wave_resonance(1.98e-3, 4.4) / 1e9 == doctest::Approx(36.091021873861166).epsilon(1e-12));
  CHECK(half_wave_resonance(1.98e-3, 3.447900286608902) / 1e9 ==
        doctest::Approx(40.77070002243171).epsilon(1e-12));
  CHECK(half_wave_resonance(2.0e-3, 4.4) == half_wave_resonance(1.0e-3, 4.4) / 2.0);
  CHECK_THROWS_AS(half_wave_resonance(0.0, 4.4), DomainError);
  CHECK_THROWS_AS(half_wave_resonance(1e-3, 0.5), DomainError);
}

TEST_CASE("dielectric attenuation") {
  const MicrostripSpec table;
  const double ee = effective_permittivity(table);
  CHECK(dielectric_attenuation(table.substrate, ee, 30e9) ==
        doctest::Approx(93.17188049362704).epsilon(1e-12));
  CHECK(dielectric_attenuation(table.substrate, ee, 60e9) ==
        doctest::Approx(2.0 * dielectric_attenuation(table.substrate, ee, 30e9)).epsilon(1e-15));
  SubstrateSpec lossless = table.substrate;
  lossless.tan_delta = 0.0;
  CHECK(dielectric_attenuation(lossless, ee, 30e9) == 0.0);
  CHECK_THROWS_AS(dielectric_attenuation(table.substrate, 5.0, 30e9), DomainError);
  CHECK_THROWS_AS(dielectric_attenuation(table.substrate, ee, 0.0), DomainError);
}

TEST_CASE("presets with larger loss tangent have larger dielectric loss") {
  const auto names = substrate_preset_names();
  for (const auto& a : names)
    for (const auto& b : names) {
      MicrostripSpec sa, sb;
      sa.substrate = substrate_preset(a);
      sb.substrate = substrate_preset(b);
      sa.substrate.thickness = sb.substrate.thickness = 0.1e-3;
      sa.substrate.eps_r = sb.substrate.eps_r = 4.4;  // same geometry and permittivity
      if (sa.substrate.tan_delta > sb.substrate.tan_delta) {
        const double ee = effective_permittivity(sa);
        CHECK(dielectric_attenuation(sa.substrate, ee, 30e9) > dielectric_attenuation(sb.substrate, ee, 30e9));
      }
    }
  CHECK(substrate_preset("RO4003").tan_delta == 0.0027);
  CHECK(substrate_preset("FR4").eps_r == 4.4);
  CHECK_THROWS_AS(substrate_preset("alumina"), DomainError);
}

TEST_CASE("conductor attenuation and roughness") {
  const MicrostripSpec table;
  CHECK(characteristic_impedance(table) == doctest::Approx(43.249018852876524).epsilon(1e-12));
  CHECK(roughness_factor(0.0, 1e-6) == 1.0);
  CHECK(roughness_factor(1e-6, skin_depth(30e9, 5.8e7)) == doctest::Approx(1.9340393208455546).epsilon(1e-12));
  double last = 1.0;
  for (double rq = 0.0; rq < 20e-6; rq += 0.5e-6) {
    const double k = roughness_factor(rq, 0.4e-6);
    CHECK(k >= last);
    CHECK(k <= 2.0);
    last = k;
  }

  MicrostripSpec smooth = table;
  smooth.roughness = 0.0;
  CHECK(conductor_attenuation(smooth, 30e9) == doctest::Approx(37.81405963710939).epsilon(1e-12));
  CHECK(conductor_attenuation(table, 30e9) == doctest::Approx(73.13387821896833).epsilon(1e-12));

  MicrostripSpec ideal = smooth;
  ideal.conductivity = 1e12;
  CHECK(conductor_attenuation(ideal, 30e9) < 1e-2 * conductor_attenuation(smooth, 30e9));

  CHECK(conductor_attenuation(table, 40e9) > conductor_attenuation(table, 30e9));
}

TEST_CASE("plane-wave attenuation") {
  SubstrateSpec fr4 = substrate_preset("FR4");
  fr4.tan_delta = 0.1;
  const SubstrateSpec ro = substrate_preset("RO4003");
  CHECK(plane_wave_attenuation(fr4, 50e9, 1.2e-3) == doctest::Approx(1.14556850564409).epsilon(1e-12));
  CHECK(plane_wave_attenuation(ro, 50e9, 1.2e-3) == doctest::Approx(0.02778258602789257).epsilon(1e-12));
  SubstrateSpec lossless = fr4;
  lossless.tan_delta = 0.0;
  CHECK(plane_wave_attenuation(lossless, 50e9, 1.2e-3) == 0.0);
  CHECK_THROWS_AS(plane_wave_attenuation(fr4, 50e9, 0.0), DomainError);
}

TEST_CASE("loss budget") {
  const MicrostripSpec table;
  const LossBudget b = loss_budget(table, 30e9);
  CHECK(b.total == b.alpha_c + b.alpha_d + b.alpha_r + b.alpha_l);
  CHECK(b.alpha_d > b.alpha_c);
  CHECK(b.alpha_r == 0.0);
  CHECK(b.alpha_l == 0.0);
  CHECK_FALSE(b.note.empty());
  CHECK(b.alpha_d == doctest::Approx(93.17188049362704 * 1.98e-3).epsilon(1e-12));

  MicrostripSpec ideal = table;
  ideal.substrate.tan_delta = 0.0;
  ideal.roughness = 0.0;
  ideal.conductivity = 1e15;
  CHECK(loss_budget(ideal, 30e9).total < 1e-4);

  for (double f = 1e9; f <= 60e9; f += 3.7e9) {
    const LossBudget x = loss_budget(table, f);
    CHECK(x.total == x.alpha_c + x.alpha_d + x.alpha_r + x.alpha_l);
    CHECK(x.alpha_c >= 0.0);
    CHECK(x.alpha_d >= 0.0);
  }
}

TEST_CASE("validation") {
  MicrostripSpec s;
  s.width = 0.0;
  CHECK_THROWS_AS(effective_permittivity(s), DomainError);
  s = {};
  s.substrate.eps_r = 0.5;
  CHECK_THROWS_AS(loss_budget(s, 1e9), DomainError);
  CHECK_THROWS_AS(skin_depth(0.0, 5.8e7), DomainError);
  CHECK_THROWS_AS(roughness_factor(-1.0, 1e-6), DomainError);
}
