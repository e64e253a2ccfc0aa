#include "microrover/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "microrover/errors.hpp"

namespace microrover {

const std::vector<TechnologyTempWindow>& technology_temp_windows() {
  static const std::vector<TechnologyTempWindow> windows = {
      {"si_electronics", std::nullopt, 573.0},
      {"si_electronics_extended", std::nullopt, 673.0},
      {"elastomers", 173.0, 473.0},
      {"li_ion", 233.0, std::nullopt},
      {"li_ion_extended", 213.0, std::nullopt},
      {"reactive_propellants", 70.0, std::nullopt},
  };
  return windows;
}

const TechnologyTempWindow& temp_window(std::string_view name) {
  for (const auto& w : technology_temp_windows()) {
    if (w.name == name) return w;
  }
  throw std::out_of_range("unknown temperature window: " + std::string(name));
}

TempGate temp_gate(const Environment& env, const TechnologyTempWindow& window) {
  double margin = std::numeric_limits<double>::infinity();
  if (window.min_temp) margin = std::min(margin, env.surface_temp - *window.min_temp);
  if (window.max_temp) margin = std::min(margin, *window.max_temp - env.surface_temp);
  return {margin >= 0.0, margin};
}

double radiative_equilibrium(double dissipated, double area, double emissivity, double env_temp,
                             const Constants& c) {
  require_non_negative(dissipated, "dissipated");
  require_positive(area, "area");
  require_positive(emissivity, "emissivity");
  require_non_negative(env_temp, "env_temp");
  const double t4 = env_temp * env_temp * env_temp * env_temp;
  return std::pow(dissipated / (emissivity * c.stefan_boltzmann * area) + t4, 0.25);
}

double venus_compute_power(double memory_bits, double transistors, ComputeStyle style,
                           const HighTempComputeModel& m) {
  require_non_negative(memory_bits, "memory_bits");
  require_non_negative(transistors, "transistors");
  if (style == ComputeStyle::gaas_like) {
    return memory_bits / 1e6 * m.memory_power +
           std::ceil(transistors / m.transistors_per_block) * m.cpu_power_per_block;
  }
  return transistors / m.transistors_per_gate * m.subsumption_gate_power;
}

double thermal_noise_power_ratio(double t1, double t2) {
  require_positive(t1, "t1");
  require_positive(t2, "t2");
  return t1 / t2;
}

} // namespace microrover
