#pragma once

#include <string_view>
#include <vector>

#include "microrover/environments.hpp"
#include "microrover/interpolation.hpp"
#include "microrover/units.hpp"

namespace microrover {

// ---------------------------------------------------------------------------
// Closed-form link laws. Templated so sweeps can run them over Eigen arrays.
// ---------------------------------------------------------------------------

/// Aperture gain eta * (pi D / lambda)^2.
template <typename Scalar>
Scalar aperture_gain(const Scalar& diameter, const Scalar& wavelength, double efficiency) {
  const Scalar x = Scalar(units::pi) * diameter / wavelength;
  return efficiency * x * x;
}

/// Free-space loss (4 pi R / lambda)^2, dimensionless.
template <typename Scalar>
Scalar free_space_loss(const Scalar& range, const Scalar& wavelength) {
  const Scalar x = Scalar(4.0 * units::pi) * range / wavelength;
  return x * x;
}

/// Ceiling bit rate at E_b/N0 = 1.
template <typename Scalar>
Scalar thermal_bit_rate(const Scalar& received_power, const Scalar& noise_temp,
                        double boltzmann = default_constants().boltzmann) {
  return received_power / (boltzmann * noise_temp);
}

// ---------------------------------------------------------------------------

struct Antenna {
  double diameter = 0.01;           // m
  double aperture_efficiency = 0.75;
};

enum class TransmitterKind { amplifier, impatt_si_sic, impatt_gan };

std::string_view to_string(TransmitterKind k);

// Electrical-to-RF efficiency against frequency, interpolated linearly in
// log(frequency) between knots.
struct TransmitterTech {
  TransmitterKind kind = TransmitterKind::impatt_si_sic;
  KnotTable efficiency_curve;

  static TransmitterTech amplifier();
  static TransmitterTech impatt_si_sic();
  static TransmitterTech impatt_gan();
  static TransmitterTech of(TransmitterKind kind);

  double min_frequency() const { return efficiency_curve.front(); }
  double max_frequency() const { return efficiency_curve.back(); }
};

struct LinkBudget {
  double wavelength = 0.0;      // m
  double tx_gain = 0.0;
  double rx_gain = 0.0;
  double free_space_loss = 0.0;
  double received_power = 0.0;  // W
  double noise_density = 0.0;   // J (kT)
  double max_bit_rate = 0.0;    // bit/s at E_b/N0 = 1
  double bit_rate_at_snr = 0.0; // bit/s
};

double antenna_gain(const Antenna& a, double wavelength);

LinkBudget link_budget(const Antenna& tx, const Antenna& rx, double rf_power, double frequency,
                       double range, double background_temp, double snr = 2.0,
                       const Constants& c = default_constants());

// Throws DomainError outside the tech's knot range.
double efficiency_at(const TransmitterTech& tech, double frequency);

// Electrical power needed to sustain data_rate: the algebraic inverse of
// link_budget divided by the transmitter efficiency at `frequency`.
double required_tx_electrical_power(const Antenna& tx, const Antenna& rx, double data_rate,
                                    double frequency, double range, double background_temp,
                                    double snr, const TransmitterTech& tech,
                                    const Constants& c = default_constants());

// Bit rate a rover produces: one compressed image plus one point spectrum
// per cadence interval, times the number of rovers sharing the link.
struct DataRequirement {
  int n_rovers = 1;
  double image_pixels = 256.0 * 256.0;
  double bits_per_pixel_compressed = 1.0;
  double spectral_channels = 100.0;
  double bits_per_channel = 10.0;
  double cadence = 3600.0; // s
};

double rover_data_requirement(const DataRequirement& req);

// Dense atmospheres (Venus-like) absorb strongly above ~20 GHz.
inline constexpr double kDenseAtmosphereRelDensity = 10.0;
inline constexpr double kDenseAtmosphereMaxFrequency = 20e9;
inline constexpr double kDefaultLinkFrequency = 300e9;
inline constexpr double kSubmillimetreFrequency = 300e9;

// Highest usable rover-to-orbiter frequency for the body; unbounded without a
// dense atmosphere.
double max_link_frequency(const Environment& env);

// Throws DomainError when `frequency` cannot propagate through the body's
// atmosphere. Returns true when the frequency is in the sub-mm regime where
// orbiter dish distortion becomes a concern (caller may warn).
bool check_link_frequency(const Environment& env, double frequency);

} // namespace microrover
