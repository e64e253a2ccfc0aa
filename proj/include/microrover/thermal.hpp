#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "microrover/environments.hpp"
#include "microrover/units.hpp"

namespace microrover {

struct TechnologyTempWindow {
  std::string name;
  std::optional<double> min_temp; // K
  std::optional<double> max_temp; // K
};

const std::vector<TechnologyTempWindow>& technology_temp_windows();
const TechnologyTempWindow& temp_window(std::string_view name);

struct TempGate {
  bool pass = true;
  double margin = 0.0; // K, negative when failing; +inf for an open window
};

TempGate temp_gate(const Environment& env, const TechnologyTempWindow& window);

inline constexpr double kDefaultVolumetricHeatCapacity = 2e6; // J/(m^3 K)

// Radiative time constant of a cube: heat capacity over the linearised
// radiative conductance, using the cube's volume-to-area ratio L/6.
template <typename Scalar>
Scalar equilibration_time(const Scalar& scale, double temp,
                          double volumetric_heat_capacity = kDefaultVolumetricHeatCapacity,
                          double emissivity = 1.0,
                          double sigma = default_constants().stefan_boltzmann) {
  return volumetric_heat_capacity * (scale / Scalar(6)) /
         (4.0 * emissivity * sigma * temp * temp * temp);
}

double radiative_equilibrium(double dissipated, double area, double emissivity, double env_temp,
                             const Constants& c = default_constants());

struct HighTempComputeModel {
  double memory_power = 1.0;                 // W per Mbit
  double cpu_power_per_block = 0.3;          // W per block
  double transistors_per_block = 5000.0;
  double subsumption_gate_power = 0.4e-6;    // W per gate
  double transistors_per_gate = 4.0;
};

enum class ComputeStyle { gaas_like, subsumption_sic };

double venus_compute_power(double memory_bits, double transistors, ComputeStyle style,
                           const HighTempComputeModel& m = {});

// Rocky-class rover load: 0.08 Mbit and ~5000 transistors.
inline constexpr double kRockyMemoryBits = 0.08e6;
inline constexpr double kRockyTransistors = 5000.0;

// Ambient above which silicon electronics are replaced by the high-temperature
// model.
inline constexpr double kSiliconMaxTemp = 573.0;

double thermal_noise_power_ratio(double t1, double t2);

} // namespace microrover
