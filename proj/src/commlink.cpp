#include "microrover/commlink.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "microrover/errors.hpp"

namespace microrover {

std::string_view to_string(TransmitterKind k) {
  switch (k) {
    case TransmitterKind::amplifier: return "amplifier";
    case TransmitterKind::impatt_si_sic: return "impatt_si_sic";
    case TransmitterKind::impatt_gan: return "impatt_gan";
  }
  return "amplifier";
}

TransmitterTech TransmitterTech::amplifier() {
  using units::GHz;
  // 50% holds from X band up to Ka band, then falls with frequency.
  return {TransmitterKind::amplifier,
          KnotTable({{8 * GHz, 0.50}, {30 * GHz, 0.50}, {90 * GHz, 0.25}, {190 * GHz, 0.10},
                     {270 * GHz, 0.05}},
                    AxisScale::log, AxisScale::linear)};
}

TransmitterTech TransmitterTech::impatt_si_sic() {
  using units::GHz;
  return {TransmitterKind::impatt_si_sic,
          KnotTable({{8 * GHz, 0.25}, {500 * GHz, 0.25}}, AxisScale::log, AxisScale::linear)};
}

TransmitterTech TransmitterTech::impatt_gan() {
  using units::GHz;
  return {TransmitterKind::impatt_gan,
          KnotTable({{8 * GHz, 0.25}, {500 * GHz, 0.25}, {5000 * GHz, 0.06}}, AxisScale::log,
                    AxisScale::linear)};
}

TransmitterTech TransmitterTech::of(TransmitterKind kind) {
  switch (kind) {
    case TransmitterKind::amplifier: return amplifier();
    case TransmitterKind::impatt_si_sic: return impatt_si_sic();
    case TransmitterKind::impatt_gan: return impatt_gan();
  }
  return impatt_si_sic();
}

double antenna_gain(const Antenna& a, double wavelength) {
  require_positive(wavelength, "wavelength");
  require_positive(a.diameter, "antenna diameter");
  if (!(a.aperture_efficiency > 0.0 && a.aperture_efficiency <= 1.0)) {
    throw std::invalid_argument("aperture efficiency must be in (0, 1]");
  }
  return aperture_gain(a.diameter, wavelength, a.aperture_efficiency);
}

LinkBudget link_budget(const Antenna& tx, const Antenna& rx, double rf_power, double frequency,
                       double range, double background_temp, double snr, const Constants& c) {
  require_positive(rf_power, "rf_power");
  require_positive(frequency, "frequency");
  require_positive(range, "range");
  require_positive(background_temp, "background_temp");
  if (!(snr >= 1.0)) throw std::invalid_argument("snr must be >= 1");

  LinkBudget lb;
  lb.wavelength = c.speed_of_light / frequency;
  lb.tx_gain = antenna_gain(tx, lb.wavelength);
  lb.rx_gain = antenna_gain(rx, lb.wavelength);
  lb.free_space_loss = free_space_loss(range, lb.wavelength);
  lb.received_power = rf_power * lb.tx_gain * lb.rx_gain / lb.free_space_loss;
  lb.noise_density = c.boltzmann * background_temp;
  lb.max_bit_rate = lb.received_power / lb.noise_density;
  lb.bit_rate_at_snr = lb.max_bit_rate / snr;
  return lb;
}

double efficiency_at(const TransmitterTech& tech, double frequency) {
  if (!tech.efficiency_curve.contains(frequency)) {
    throw DomainError(std::string(to_string(tech.kind)) + ": frequency " +
                      std::to_string(frequency / units::GHz) + " GHz outside [" +
                      std::to_string(tech.min_frequency() / units::GHz) + ", " +
                      std::to_string(tech.max_frequency() / units::GHz) + "] GHz");
  }
  return tech.efficiency_curve(frequency);
}

double required_tx_electrical_power(const Antenna& tx, const Antenna& rx, double data_rate,
                                    double frequency, double range, double background_temp,
                                    double snr, const TransmitterTech& tech,
                                    const Constants& c) {
  require_positive(data_rate, "data_rate");
  require_positive(frequency, "frequency");
  require_positive(range, "range");
  require_positive(background_temp, "background_temp");
  if (!(snr >= 1.0)) throw std::invalid_argument("snr must be >= 1");
  const double eta = efficiency_at(tech, frequency);

  const double wavelength = c.speed_of_light / frequency;
  const double gains = antenna_gain(tx, wavelength) * antenna_gain(rx, wavelength);
  const double received = data_rate * snr * c.boltzmann * background_temp;
  const double rf_power = received * free_space_loss(range, wavelength) / gains;
  return rf_power / eta;
}

double rover_data_requirement(const DataRequirement& req) {
  if (req.n_rovers < 0) throw std::invalid_argument("n_rovers must be non-negative");
  require_non_negative(req.image_pixels, "image_pixels");
  require_non_negative(req.bits_per_pixel_compressed, "bits_per_pixel_compressed");
  require_non_negative(req.spectral_channels, "spectral_channels");
  require_non_negative(req.bits_per_channel, "bits_per_channel");
  require_positive(req.cadence, "cadence");
  const double bits = req.image_pixels * req.bits_per_pixel_compressed +
                      req.spectral_channels * req.bits_per_channel;
  return req.n_rovers * bits / req.cadence;
}

double max_link_frequency(const Environment& env) {
  if (env.has_atmosphere && env.atmosphere_rel_density >= kDenseAtmosphereRelDensity) {
    return kDenseAtmosphereMaxFrequency;
  }
  return std::numeric_limits<double>::infinity();
}

bool check_link_frequency(const Environment& env, double frequency) {
  require_positive(frequency, "frequency");
  if (env.has_atmosphere && env.atmosphere_rel_density >= kDenseAtmosphereRelDensity &&
      frequency > kDenseAtmosphereMaxFrequency) {
    throw DomainError(env.name + ": atmospheric absorption rules out links above 20 GHz");
  }
  return frequency > kSubmillimetreFrequency;
}

} // namespace microrover
