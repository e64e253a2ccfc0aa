#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace microrover {

enum class RadiationRegime { benign, jovian_europa, jovian_io };

std::string_view to_string(RadiationRegime r);
std::optional<RadiationRegime> parse_radiation_regime(std::string_view s);

// A target body as seen by a rover on its surface. Distances in the catalog
// file are AU; everything else is SI.
struct Environment {
  std::string name;
  double solar_distance = 1.0;         // AU
  double surface_temp = 300.0;         // K
  double gravity = 9.81;               // m/s^2
  bool has_atmosphere = false;
  double atmosphere_rel_density = 0.0; // Earth = 1
  double link_background_temp = 300.0; // K, what the orbiter dish sees
  RadiationRegime radiation_regime = RadiationRegime::benign;
  double orbiter_range = 1e7;          // m

  bool operator==(const Environment&) const = default;
};

inline constexpr double kLargeBodyOrbiterRange = 1e7;
inline constexpr double kSmallBodyOrbiterRange = 2e6;
inline constexpr double kMinSurfaceTemp = 10.0;
inline constexpr double kMaxSurfaceTemp = 800.0;

// Throws SchemaError naming the first violated field.
void validate(const Environment& env);

// Catalog documents are a JSON array of objects whose keys are exactly the
// Environment field names. link_background_temp defaults to surface_temp and
// orbiter_range to kLargeBodyOrbiterRange; unknown keys are rejected.
std::vector<Environment> parse_catalog(std::string_view json_text);
std::vector<Environment> load_catalog(const std::filesystem::path& path);

nlohmann::json to_json(const Environment& env);
Environment environment_from_json(const nlohmann::json& j);
std::string serialize_catalog(const std::vector<Environment>& catalog);

const std::vector<Environment>& builtin_catalog();

// Case-insensitive match on name; spaces, '-' and '_' are interchangeable.
const Environment* find_environment(const std::vector<Environment>& catalog,
                                    std::string_view name);

// Size floors for sensor and subsystem technologies. Ranged entries keep both
// ends and a nominal value used by the feasibility solver.
struct TechnologyFloor {
  std::string name;
  double nominal = 0.0; // m
  double low = 0.0;     // m
  double high = 0.0;    // m
  std::string note;
};

const std::vector<TechnologyFloor>& technology_floors();
const TechnologyFloor& technology_floor(std::string_view name);

} // namespace microrover
