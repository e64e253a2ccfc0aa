#include "doctest.h"

#include <cmath>
#include <random>

#include "microrover/commlink.hpp"
#include "microrover/environments.hpp"
#include "microrover/errors.hpp"

using namespace microrover;
using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kB = 1.380649e-23;
constexpr double kC = 2.99792458e8;

// Independent closed form: rate at SNR from RF power.
double oracle_rate(double p, double dt, double dr, double eta, double lambda, double r, double t,
                   double snr) {
  const double gt = eta * std::pow(kPi * dt / lambda, 2);
  const double gr = eta * std::pow(kPi * dr / lambda, 2);
  const double fsl = std::pow(4 * kPi * r / lambda, 2);
  return p * gt * gr / fsl / (kB * t) / snr;
}

} // namespace

TEST_SUITE("commlink") {

TEST_CASE("aperture gain") {
  CHECK(antenna_gain({0.01, 0.75}, 0.01) == Approx(0.75 * kPi * kPi).epsilon(1e-12));
  CHECK(antenna_gain({0.01, 0.75}, 0.01) == Approx(7.4).epsilon(0.01));
  CHECK(antenna_gain({1.0, 0.75}, 0.01) == Approx(7.4e4).epsilon(0.01));
  CHECK(antenna_gain({0.01 / kPi, 1.0}, 0.01) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("1 cm to 1 m link at 1 cm wavelength over 1e4 km") {
  const LinkBudget b = link_budget({0.01, 0.75}, {1.0, 0.75}, 1e-3, kC / 0.01, 1e7, 300.0, 2.0);
  CHECK(b.wavelength == Approx(0.01));
  CHECK(b.free_space_loss == Approx(std::pow(4 * kPi * 1e7 / 0.01, 2)).epsilon(1e-12));
  CHECK(b.received_power == Approx(3.46e-18).epsilon(0.01));
  CHECK(b.noise_density == Approx(kB * 300.0).epsilon(1e-12));
  CHECK(b.max_bit_rate == Approx(825.0).epsilon(0.02));
  CHECK(b.bit_rate_at_snr == Approx(413.0).epsilon(0.02));
  CHECK(b.bit_rate_at_snr == Approx(b.max_bit_rate / 2.0).epsilon(1e-14));
  CHECK(b.received_power ==
        Approx(1e-3 * b.tx_gain * b.rx_gain / b.free_space_loss).epsilon(1e-14));

  const LinkBudget half = link_budget({0.01, 0.75}, {1.0, 0.75}, 0.5e-3, kC / 0.01, 1e7, 300.0);
  CHECK(half.bit_rate_at_snr == Approx(206.0).epsilon(0.02));

  const LinkBudget far = link_budget({0.01, 0.75}, {1.0, 0.75}, 1e-3, kC / 0.01, 2e7, 300.0);
  CHECK(far.max_bit_rate == Approx(b.max_bit_rate / 4.0).epsilon(1e-12));
}

TEST_CASE("rate scales as P D_T^2 D_R^2 f^2 / R^2 under random perturbations") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double base = link_budget({0.01, 0.75}, {1.0, 0.75}, 1e-3, 30e9, 1e7, 300.0).bit_rate_at_snr;
  for (int i = 0; i < 200; ++i) {
    const double kp = std::exp(u(rng)), kt = std::exp(u(rng)), kr = std::exp(u(rng)),
                 kf = std::exp(u(rng)), kd = std::exp(u(rng));
    const double rate = link_budget({0.01 * kt, 0.75}, {1.0 * kr, 0.75}, 1e-3 * kp, 30e9 * kf,
                                    1e7 * kd, 300.0)
                            .bit_rate_at_snr;
    CHECK(rate == Approx(base * kp * kt * kt * kr * kr * kf * kf / (kd * kd)).epsilon(1e-9));
    CHECK(rate == Approx(oracle_rate(1e-3 * kp, 0.01 * kt, kr, 0.75, kC / (30e9 * kf), 1e7 * kd,
                                     300.0, 2.0))
                      .epsilon(1e-9));
  }
}

TEST_CASE("transmitter efficiency knots") {
  const auto amp = TransmitterTech::amplifier();
  CHECK(efficiency_at(amp, 30e9) == Approx(0.5));
  CHECK(efficiency_at(amp, 90e9) == Approx(0.25));
  CHECK(efficiency_at(amp, 190e9) == Approx(0.10));
  CHECK(efficiency_at(amp, 270e9) == Approx(0.05));
  CHECK_THROWS_AS(efficiency_at(amp, 300e9), DomainError);

  const auto si = TransmitterTech::impatt_si_sic();
  CHECK(efficiency_at(si, 300e9) == Approx(0.25));
  CHECK(efficiency_at(si, 500e9) == Approx(0.25));
  CHECK_THROWS_AS(efficiency_at(si, 600e9), DomainError);

  const auto gan = TransmitterTech::impatt_gan();
  CHECK(efficiency_at(gan, 5e12) == Approx(0.06));

  // Log-frequency interpolation: the midpoint in log f of 90 and 190 GHz.
  const double mid = std::sqrt(90e9 * 190e9);
  CHECK(efficiency_at(amp, mid) == Approx(0.175).epsilon(1e-12));

  for (const auto& tech : {amp, si, gan}) {
    const auto& y = tech.efficiency_curve.y();
    for (Eigen::Index i = 1; i < y.size(); ++i) CHECK(y(i) <= y(i - 1));
    CHECK((y > 0.0).all());
    CHECK((y <= 1.0).all());
  }
}

TEST_CASE("required power for 100 bit/s at 300 GHz") {
  const auto tech = TransmitterTech::impatt_si_sic();
  const double p = required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 100.0, 300e9, 1e7,
                                                300.0, 2.0, tech);
  CHECK(p == Approx(1e-5).epsilon(0.10));
  const double lambda = kC / 300e9;
  const double oracle = 100.0 * 2.0 * kB * 300.0 * std::pow(4 * kPi * 1e7 / lambda, 2) /
                        (0.75 * std::pow(kPi * 0.01 / lambda, 2)) /
                        (0.75 * std::pow(kPi * 1.0 / lambda, 2)) / 0.25;
  CHECK(p == Approx(oracle).epsilon(1e-12));

  const double near = required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 100.0, 300e9, 2e6,
                                                   300.0, 2.0, tech);
  CHECK(near == Approx(0.04 * p).epsilon(1e-12));
  CHECK(near == Approx(0.4e-6).epsilon(0.10));

  const double four = required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 400.0, 300e9, 1e7,
                                                   300.0, 2.0, tech);
  CHECK(four == Approx(4.0 * p).epsilon(1e-12));
  CHECK_THROWS(required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 0.0, 300e9, 1e7, 300.0,
                                            2.0, tech));
  CHECK_THROWS_AS(required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 100.0, 1e12, 1e7,
                                               300.0, 2.0, tech),
                  DomainError);
}

TEST_CASE("required power inverts the link budget") {
  const auto tech = TransmitterTech::impatt_si_sic();
  for (double rate : {0.1, 18.48, 100.0, 1e4}) {
    for (double range : {2e6, 1e7, 3e8}) {
      const double pe = required_tx_electrical_power({0.005, 0.75}, {1.0, 0.75}, rate, 300e9,
                                                     range, 120.0, 2.0, tech);
      const LinkBudget b =
          link_budget({0.005, 0.75}, {1.0, 0.75}, pe * 0.25, 300e9, range, 120.0, 2.0);
      CHECK(b.bit_rate_at_snr == Approx(rate).epsilon(1e-9));
    }
  }
}

TEST_CASE("rover data requirement") {
  DataRequirement d;
  CHECK(rover_data_requirement(d) == Approx((256.0 * 256.0 + 100.0 * 10.0) / 3600.0));
  CHECK(rover_data_requirement(d) == Approx(20.0).epsilon(0.1));
  d.n_rovers = 5;
  CHECK(rover_data_requirement(d) == Approx(100.0).epsilon(0.1));
  d.image_pixels = 0;
  d.spectral_channels = 0;
  CHECK(rover_data_requirement(d) == 0.0);
}

TEST_CASE("dense atmosphere caps the link frequency") {
  const auto& cat = builtin_catalog();
  const Environment& venus = *find_environment(cat, "Venus");
  const Environment& mars = *find_environment(cat, "Mars");
  CHECK(max_link_frequency(venus) == Approx(20e9));
  CHECK(std::isinf(max_link_frequency(mars)));
  CHECK_THROWS_AS(check_link_frequency(venus, 300e9), DomainError);
  CHECK_FALSE(check_link_frequency(venus, 20e9));
  CHECK_FALSE(check_link_frequency(mars, 300e9));
  CHECK(check_link_frequency(mars, 1e12));
}

}
