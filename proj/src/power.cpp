#include "microrover/power.hpp"

#include <algorithm>
#include <cmath>

namespace microrover {

std::string_view to_string(PowerKind k) {
  switch (k) {
    case PowerKind::solar: return "solar";
    case PowerKind::rtg_current: return "rtg_current";
    case PowerKind::rtg_vacuum: return "rtg_vacuum";
    case PowerKind::betavoltaic_current: return "betavoltaic_current";
    case PowerKind::betavoltaic_theoretical: return "betavoltaic_theoretical";
    case PowerKind::alphavoltaic_theoretical: return "alphavoltaic_theoretical";
    case PowerKind::battery_primary: return "battery_primary";
  }
  return "solar";
}

std::optional<PowerKind> parse_power_kind(std::string_view s) {
  for (PowerKind k : kAllPowerKinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

bool is_volumetric(PowerKind k) { return k != PowerKind::solar; }

double volumetric_power_density(PowerKind k) {
  constexpr double mW_per_cm3 = 1e-3 / 1e-6;
  switch (k) {
    case PowerKind::rtg_vacuum: return 5.0 * mW_per_cm3;
    case PowerKind::betavoltaic_current: return 0.030 * mW_per_cm3;
    case PowerKind::betavoltaic_theoretical: return 5.0 * mW_per_cm3;
    case PowerKind::alphavoltaic_theoretical: return 150.0 * mW_per_cm3;
    default: break;
  }
  throw std::invalid_argument(std::string(to_string(k)) + " has no flat volumetric density");
}

const KnotTable& rtg_current_density_curve() {
  // 1.4 mW from 4.3 cm^3, ~50 mW from a 4 cm cube, and 5 W/kg at 2 g/cm^3
  // for large units.
  static const KnotTable curve({{kSmallestRtgVolume, 1.4e-3 / kSmallestRtgVolume},
                                {64e-6, 50e-3 / 64e-6},
                                {1e-3, 1e4}},
                               AxisScale::log, AxisScale::log);
  return curve;
}

RtgOutput rtg_power(double volume, PowerKind kind) {
  require_non_negative(volume, "volume");
  RtgOutput out;
  if (kind == PowerKind::rtg_vacuum) {
    out.density = volumetric_power_density(kind);
  } else if (kind == PowerKind::rtg_current) {
    const KnotTable& curve = rtg_current_density_curve();
    if (volume < curve.front()) {
      out.density = curve.y()(0);
      out.below_current_art = true;
    } else if (volume > curve.back()) {
      out.density = curve.y()(curve.size() - 1);
    } else {
      out.density = curve(volume);
    }
  } else {
    throw std::invalid_argument("rtg_power needs an RTG kind");
  }
  out.power = out.density * volume;
  return out;
}

double radiovoltaic_power(double volume, PowerKind kind) {
  require_non_negative(volume, "volume");
  switch (kind) {
    case PowerKind::betavoltaic_current:
    case PowerKind::betavoltaic_theoretical:
    case PowerKind::alphavoltaic_theoretical:
      return volumetric_power_density(kind) * volume;
    default:
      throw std::invalid_argument("radiovoltaic_power needs a beta/alphavoltaic kind");
  }
}

std::string_view to_string(StoreKind k) {
  switch (k) {
    case StoreKind::battery_secondary: return "battery_secondary";
    case StoreKind::capacitor: return "capacitor";
    case StoreKind::flywheel: return "flywheel";
    case StoreKind::spring: return "spring";
  }
  return "battery_secondary";
}

EnergyStore EnergyStore::battery(bool extended_cold) {
  return {StoreKind::battery_secondary, 1.44e6, 100.0,
          extended_cold ? kBatteryExtendedMinTemp : kBatteryMinTemp, 0.0};
}

EnergyStore EnergyStore::capacitor() {
  // Non-electrolytic thin film: works at cryogenic temperatures.
  return {StoreKind::capacitor, 360.0, 5000.0, 0.0, 0.0};
}

EnergyStore EnergyStore::flywheel(double scale) {
  require_positive(scale, "scale");
  const double loss = std::min(0.001 * 0.2 / scale, 0.999);
  return {StoreKind::flywheel, 2.7e5, 1000.0, 0.0, loss};
}

EnergyStore EnergyStore::spring() {
  return {StoreKind::spring, 1000.0, 1000.0, 0.0, 0.0};
}

void validate(const EnergyStore& s) {
  require_positive(s.specific_energy, "specific_energy");
  require_non_negative(s.specific_power, "specific_power");
  require_non_negative(s.min_temp, "min_temp");
  if (!(s.self_discharge_per_day >= 0.0 && s.self_discharge_per_day < 1.0)) {
    throw std::invalid_argument("self_discharge_per_day must be in [0, 1)");
  }
}

StoreLifetime store_lifetime(const RoverDesign& design, const EnergyStore& store, double load,
                             double ambient_temp) {
  validate(design);
  validate(store);
  require_positive(load, "load");
  if (store.kind == StoreKind::battery_secondary && ambient_temp < store.min_temp) {
    return {0.0, true};
  }
  const double energy = design.store_mass() * store.specific_energy;
  if (store.self_discharge_per_day == 0.0) return {energy / load, false};
  const double k = -std::log1p(-store.self_discharge_per_day) / units::day;
  return {std::log1p(k * energy / load) / k, false};
}

double link_frequency(const LinkConfig& link, const Environment& env) {
  return std::min(link.frequency, max_link_frequency(env));
}

double transmit_power(const RoverDesign& design, const Environment& env, const LinkConfig& link,
                      double data_rate, const Constants& c) {
  if (data_rate == 0.0) return 0.0;
  return required_tx_electrical_power(design.antenna(), link.receiver, data_rate,
                                      link_frequency(link, env), env.orbiter_range,
                                      env.link_background_temp, link.snr,
                                      TransmitterTech::of(link.transmitter), c);
}

double data_rate_from_power(const RoverDesign& design, const Environment& env,
                            const LinkConfig& link, double electrical_power, const Constants& c) {
  require_non_negative(electrical_power, "electrical_power");
  // Required power is linear in rate, so one inversion at 1 bit/s suffices.
  return electrical_power / transmit_power(design, env, link, 1.0, c);
}

double rover_load(const RoverDesign& design, const Environment& env, const Duty& duty,
                  const LinkConfig& link, const LocomotionModel& loco, const Constants& c) {
  validate(design);
  require_non_negative(duty.transmit_rate, "transmit_rate");
  require_non_negative(duty.instrument_power, "instrument_power");
  double load = 0.0;
  if (duty.compute) load += duty.compute_power ? *duty.compute_power : compute_load(design.scale);
  if (duty.transmit_rate > 0.0) load += transmit_power(design, env, link, duty.transmit_rate, c);
  if (duty.locomote) load += traverse_power(design, loco);
  load += duty.instrument_power;
  return load;
}

PowerOutput generated_power(const RoverDesign& design, const Environment& env, PowerKind kind,
                            const Constants& c) {
  validate(design);
  PowerOutput out;
  switch (kind) {
    case PowerKind::solar:
      out.power = solar_power(design.panel_area(), env.solar_distance,
                              c.solar_reference_panel_output);
      break;
    case PowerKind::rtg_current: {
      const RtgOutput r = rtg_power(design.power_source_volume(), kind);
      out.power = r.power;
      out.below_current_art = r.below_current_art;
      break;
    }
    case PowerKind::rtg_vacuum:
      if (env.has_atmosphere) {
        out.unavailable = "vacuum-insulated RTG cannot run in an atmosphere";
        break;
      }
      out.power = rtg_power(design.power_source_volume(), kind).power;
      break;
    case PowerKind::betavoltaic_current:
    case PowerKind::betavoltaic_theoretical:
    case PowerKind::alphavoltaic_theoretical:
      out.power = radiovoltaic_power(design.power_source_volume(), kind);
      break;
    case PowerKind::battery_primary: {
      const EnergyStore cell = EnergyStore::battery();
      if (env.surface_temp < cell.min_temp) {
        out.unavailable = "frozen electrolyte";
        break;
      }
      out.power = design.store_mass() * cell.specific_energy / kPrimaryBatteryDesignLife;
      break;
    }
  }
  return out;
}

double data_rate_scaling_exponent(PowerKind kind) { return is_volumetric(kind) ? 5.0 : 4.0; }

} // namespace microrover
