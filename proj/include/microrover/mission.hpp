#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "microrover/environments.hpp"
#include "microrover/units.hpp"

namespace microrover {

struct OrbiterModel {
  double dish_diameter = 1.0;        // m
  double dish_mass = 1.0;            // kg each
  int n_dishes = 2;
  double subsystem_mass = 1.0;       // kg
  double panel_mass_per_area = 1.0;  // kg/m^2
  double rtg_specific_power = 5.0;   // W/kg
  double rate_per_watt_at_1au = 25000.0; // bit/s per electrical W
  double required_rate = 100.0;      // bit/s
  double margin = 1.3;
  double min_power_system_mass = 1.0; // kg
};

void validate(const OrbiterModel& m);

enum class OrbiterPower { solar, rtg };
std::string_view to_string(OrbiterPower p);
std::optional<OrbiterPower> parse_orbiter_power(std::string_view s);

struct OrbiterMass {
  double required_power = 0.0; // W electrical for the Earth link
  double dishes = 0.0;
  double subsystems = 0.0;
  double power_system = 0.0;
  double total = 0.0;          // with margin
};

// Earth-link power grows as distance^2; solar panel area for that power
// grows as another distance^2.
OrbiterMass orbiter_mass(const OrbiterModel& m, double earth_distance_au, OrbiterPower power,
                         double solar_reference_output =
                             default_constants().solar_reference_panel_output);

// Lighter of the two power options.
OrbiterMass lightest_orbiter(const OrbiterModel& m, double earth_distance_au,
                             OrbiterPower* chosen = nullptr);

inline constexpr double kDefaultThrusterEfficiency = 0.5;
inline constexpr double kDefaultIonExhaustVelocity = 5e4; // m/s

double ion_delta_v_per_year(double electrical, double total_mass,
                            double thruster_efficiency = kDefaultThrusterEfficiency,
                            double exhaust_velocity = kDefaultIonExhaustVelocity,
                            const Constants& c = default_constants());

template <typename Scalar>
Scalar mass_ratio(const Scalar& delta_v, double isp_s,
                  double g0 = default_constants().standard_gravity) {
  using std::exp;
  return exp(delta_v / (g0 * isp_s));
}

double landing_propellant(double delivered, double delta_v, double isp_s,
                          const Constants& c = default_constants());

struct LanderStack {
  double rover_mass = 0.01;   // kg
  double lander_mass = 0.01;  // kg
  std::optional<double> aeroshell_mass; // default: rover + lander, only with an atmosphere
};

double stack_mass(const LanderStack& s, const Environment& env);

struct CampaignTarget {
  Environment environment;
  int n_rovers = 0;
  LanderStack stack;
  std::optional<OrbiterPower> orbiter_power; // lightest when unset
};

struct Campaign {
  std::vector<CampaignTarget> targets;
  double delta_v = 13000.0; // m/s, average per target
  double isp = 350.0;       // s
  OrbiterModel orbiter;
};

struct TargetMass {
  std::string name;
  OrbiterPower orbiter_power = OrbiterPower::solar;
  double orbiter = 0.0;
  double stacks = 0.0;
  double delivered = 0.0;
  double leo = 0.0;
};

struct CampaignMass {
  std::vector<TargetMass> targets;
  double mass_ratio = 1.0;
  double total_leo = 0.0;
};

CampaignMass campaign_mass(const Campaign& campaign, const Constants& c = default_constants());

// JSON: {"delta_v", "isp", "targets": [{"body" | "environment", "n_rovers",
// "rover_mass", "lander_mass", "aeroshell_mass", "orbiter_power"}]}. Bodies
// named by "body" resolve against `catalog`.
Campaign parse_campaign(std::string_view json_text, const std::vector<Environment>& catalog);

// Twenty-target outer and inner system campaign.
Campaign builtin_campaign();

} // namespace microrover
