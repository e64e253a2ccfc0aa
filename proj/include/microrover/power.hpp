#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "microrover/commlink.hpp"
#include "microrover/design.hpp"
#include "microrover/environments.hpp"
#include "microrover/interpolation.hpp"
#include "microrover/locomotion.hpp"
#include "microrover/units.hpp"

namespace microrover {

enum class PowerKind {
  solar,
  rtg_current,
  rtg_vacuum,
  betavoltaic_current,
  betavoltaic_theoretical,
  alphavoltaic_theoretical,
  battery_primary
};

std::string_view to_string(PowerKind k);
std::optional<PowerKind> parse_power_kind(std::string_view s);
inline constexpr PowerKind kAllPowerKinds[] = {
    PowerKind::solar,
    PowerKind::rtg_current,
    PowerKind::rtg_vacuum,
    PowerKind::betavoltaic_current,
    PowerKind::betavoltaic_theoretical,
    PowerKind::alphavoltaic_theoretical,
    PowerKind::battery_primary};

bool is_volumetric(PowerKind k);

template <typename Scalar>
Scalar solar_power(const Scalar& area, const Scalar& distance_au,
                   double reference_output = default_constants().solar_reference_panel_output) {
  return reference_output * area / (distance_au * distance_au);
}

// Electrical output per unit volume (W/m^3) for the flat-density sources.
double volumetric_power_density(PowerKind k);

struct RtgOutput {
  double power = 0.0;              // W
  double density = 0.0;            // W/m^3
  bool below_current_art = false;  // volume under the smallest built device
};

// Current-technology volumetric density against device volume (log-log).
const KnotTable& rtg_current_density_curve();
inline constexpr double kSmallestRtgVolume = 4.3e-6; // m^3

RtgOutput rtg_power(double volume, PowerKind kind);
double radiovoltaic_power(double volume, PowerKind kind);

enum class StoreKind { battery_secondary, capacitor, flywheel, spring };
std::string_view to_string(StoreKind k);

struct EnergyStore {
  StoreKind kind = StoreKind::battery_secondary;
  double specific_energy = 0.0;        // J/kg
  double specific_power = 0.0;         // W/kg
  double min_temp = 0.0;               // K
  double self_discharge_per_day = 0.0; // fraction of remaining charge

  static EnergyStore battery(bool extended_cold = false);
  static EnergyStore capacitor();
  // Frictional loss 0.1 %/day at 0.2 m, scaling as 1/L.
  static EnergyStore flywheel(double scale);
  static EnergyStore spring();
};

void validate(const EnergyStore& s);

inline constexpr double kBatteryMinTemp = 233.0;
inline constexpr double kBatteryExtendedMinTemp = 213.0;

struct StoreLifetime {
  double seconds = 0.0;
  bool frozen_electrolyte = false;
};

// Time for the store (store_mass_fraction of the rover mass) to run `load`
// down to empty. Non-zero self-discharge uses exponential decay of the
// remaining charge on top of the constant draw.
StoreLifetime store_lifetime(const RoverDesign& design, const EnergyStore& store, double load,
                             double ambient_temp = 300.0);

// Rover-to-orbiter link settings shared by load and data-rate models.
struct LinkConfig {
  double frequency = kDefaultLinkFrequency;
  TransmitterKind transmitter = TransmitterKind::impatt_si_sic;
  Antenna receiver{1.0, 0.75};
  double snr = 2.0;
};

// Frequency actually used at the body: the configured one, capped by
// atmospheric absorption.
double link_frequency(const LinkConfig& link, const Environment& env);

double transmit_power(const RoverDesign& design, const Environment& env, const LinkConfig& link,
                      double data_rate, const Constants& c = default_constants());

// Achievable bit rate (at the link SNR) from `electrical_power` watts fed to
// the transmitter.
double data_rate_from_power(const RoverDesign& design, const Environment& env,
                            const LinkConfig& link, double electrical_power,
                            const Constants& c = default_constants());

// 1 uW at 1 cm, scaling with chip area, floored at 1 nW.
template <typename Scalar>
Scalar compute_load(const Scalar& scale) {
  using std::max;
  const Scalar r = scale / Scalar(0.01);
  return max(Scalar(1e-6) * r * r, Scalar(1e-9));
}

struct Duty {
  bool compute = false;
  double transmit_rate = 0.0;       // bit/s, 0 for none
  bool locomote = false;
  double instrument_power = 0.0;    // W
  std::optional<double> compute_power; // replaces the default compute model
};

double rover_load(const RoverDesign& design, const Environment& env, const Duty& duty,
                  const LinkConfig& link = {}, const LocomotionModel& loco = {},
                  const Constants& c = default_constants());

inline constexpr double kPrimaryBatteryDesignLife = 3.15576e7; // s

struct PowerOutput {
  double power = 0.0; // W
  bool below_current_art = false;
  std::string unavailable; // non-empty when the source cannot run here
};

PowerOutput generated_power(const RoverDesign& design, const Environment& env, PowerKind kind,
                            const Constants& c = default_constants());

double data_rate_scaling_exponent(PowerKind kind);

} // namespace microrover
