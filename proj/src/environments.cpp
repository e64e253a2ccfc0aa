#include "microrover/environments.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "microrover/errors.hpp"

namespace microrover {

std::string_view to_string(RadiationRegime r) {
  switch (r) {
    case RadiationRegime::benign: return "benign";
    case RadiationRegime::jovian_europa: return "jovian_europa";
    case RadiationRegime::jovian_io: return "jovian_io";
  }
  return "benign";
}

std::optional<RadiationRegime> parse_radiation_regime(std::string_view s) {
  if (s == "benign") return RadiationRegime::benign;
  if (s == "jovian_europa") return RadiationRegime::jovian_europa;
  if (s == "jovian_io") return RadiationRegime::jovian_io;
  return std::nullopt;
}

void validate(const Environment& env) {
  if (env.name.empty()) throw SchemaError("name", "must be non-empty");
  if (!(env.solar_distance > 0.0)) throw SchemaError("solar_distance", "must be > 0");
  if (!(env.surface_temp >= kMinSurfaceTemp && env.surface_temp <= kMaxSurfaceTemp)) {
    throw SchemaError("surface_temp", "must lie in [10, 800] K");
  }
  if (!(env.gravity > 0.0)) throw SchemaError("gravity", "must be > 0");
  if (!(env.atmosphere_rel_density >= 0.0)) {
    throw SchemaError("atmosphere_rel_density", "must be >= 0");
  }
  if (!(env.link_background_temp > 0.0)) throw SchemaError("link_background_temp", "must be > 0");
  if (!(env.orbiter_range > 0.0)) throw SchemaError("orbiter_range", "must be > 0");
}

namespace {

constexpr std::string_view kFields[] = {
    "name",         "solar_distance",       "surface_temp",     "gravity",
    "has_atmosphere", "atmosphere_rel_density", "link_background_temp", "radiation_regime",
    "orbiter_range"};

double number_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw SchemaError(key, "must be a number");
  return v.get<double>();
}

} // namespace

Environment environment_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("<entry>", "catalog entries must be objects");
  for (const auto& [key, _] : j.items()) {
    if (std::find(std::begin(kFields), std::end(kFields), key) == std::end(kFields)) {
      throw SchemaError(key, "unknown key");
    }
  }
  for (const char* required : {"name", "solar_distance", "surface_temp"}) {
    if (!j.contains(required)) throw SchemaError(required, "missing required key");
  }

  Environment env;
  if (!j.at("name").is_string()) throw SchemaError("name", "must be a string");
  env.name = j.at("name").get<std::string>();
  env.solar_distance = number_field(j, "solar_distance");
  env.surface_temp = number_field(j, "surface_temp");
  env.link_background_temp = env.surface_temp;
  env.orbiter_range = kLargeBodyOrbiterRange;
  if (j.contains("gravity")) env.gravity = number_field(j, "gravity");
  if (j.contains("has_atmosphere")) {
    if (!j.at("has_atmosphere").is_boolean()) throw SchemaError("has_atmosphere", "must be boolean");
    env.has_atmosphere = j.at("has_atmosphere").get<bool>();
  }
  if (j.contains("atmosphere_rel_density")) {
    env.atmosphere_rel_density = number_field(j, "atmosphere_rel_density");
  }
  if (j.contains("link_background_temp")) {
    env.link_background_temp = number_field(j, "link_background_temp");
  }
  if (j.contains("radiation_regime")) {
    const auto& r = j.at("radiation_regime");
    auto parsed = r.is_string() ? parse_radiation_regime(r.get<std::string>()) : std::nullopt;
    if (!parsed) throw SchemaError("radiation_regime", "expected benign|jovian_europa|jovian_io");
    env.radiation_regime = *parsed;
  }
  if (j.contains("orbiter_range")) env.orbiter_range = number_field(j, "orbiter_range");
  validate(env);
  return env;
}

nlohmann::json to_json(const Environment& env) {
  return nlohmann::json{{"name", env.name},
                        {"solar_distance", env.solar_distance},
                        {"surface_temp", env.surface_temp},
                        {"gravity", env.gravity},
                        {"has_atmosphere", env.has_atmosphere},
                        {"atmosphere_rel_density", env.atmosphere_rel_density},
                        {"link_background_temp", env.link_background_temp},
                        {"radiation_regime", std::string(to_string(env.radiation_regime))},
                        {"orbiter_range", env.orbiter_range}};
}

std::vector<Environment> parse_catalog(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
  if (!doc.is_array()) throw SchemaError("<document>", "catalog must be a JSON array");
  std::vector<Environment> out;
  out.reserve(doc.size());
  for (const auto& entry : doc) out.push_back(environment_from_json(entry));
  return out;
}

std::vector<Environment> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("<document>", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string serialize_catalog(const std::vector<Environment>& catalog) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& env : catalog) doc.push_back(to_json(env));
  return doc.dump(2);
}

const std::vector<Environment>& builtin_catalog() {
  using R = RadiationRegime;
  constexpr double big = kLargeBodyOrbiterRange;
  constexpr double small = kSmallBodyOrbiterRange;
  auto body = [](std::string name, double au, double temp, double g, bool atm, double rel_density,
                 R regime, double range) {
    Environment e;
    e.name = std::move(name);
    e.solar_distance = au;
    e.surface_temp = temp;
    e.gravity = g;
    e.has_atmosphere = atm;
    e.atmosphere_rel_density = rel_density;
    e.link_background_temp = temp;
    e.radiation_regime = regime;
    e.orbiter_range = range;
    return e;
  };
  // Surface temperatures: lunar and Mercury extremes, Venus at mean elevation
  // (460 C), Sedna near its present ~90 AU distance.
  static const std::vector<Environment> catalog = {
      body("Mercury dayside", 0.387, 753.0, 3.70, false, 0.0, R::benign, big),
      body("Mercury night", 0.387, 100.0, 3.70, false, 0.0, R::benign, big),
      body("Venus", 0.72, 733.0, 8.87, true, 90.0, R::benign, big),
      body("Moon dayside", 1.0, 393.0, 1.62, false, 0.0, R::benign, big),
      body("Moon night", 1.0, 100.0, 1.62, false, 0.0, R::benign, big),
      body("Mars", 1.524, 210.0, 3.71, true, 0.016, R::benign, big),
      body("Phobos", 1.524, 233.0, 0.0057, false, 0.0, R::benign, small),
      body("Vesta", 2.36, 190.0, 0.25, false, 0.0, R::benign, small),
      body("Ceres", 2.77, 168.0, 0.28, false, 0.0, R::benign, small),
      body("Io", 5.2, 110.0, 1.80, false, 0.0, R::jovian_io, big),
      body("Europa", 5.2, 102.0, 1.31, false, 0.0, R::jovian_europa, big),
      body("Ganymede", 5.2, 110.0, 1.43, false, 0.0, R::benign, big),
      body("Callisto", 5.2, 134.0, 1.24, false, 0.0, R::benign, big),
      body("Titan", 9.58, 94.0, 1.35, true, 4.4, R::benign, big),
      body("Enceladus", 9.58, 75.0, 0.113, false, 0.0, R::benign, small),
      body("Dione", 9.58, 87.0, 0.232, false, 0.0, R::benign, small),
      body("Rhea", 9.58, 76.0, 0.264, false, 0.0, R::benign, small),
      body("Iapetus", 9.58, 110.0, 0.223, false, 0.0, R::benign, small),
      body("Titania", 19.2, 70.0, 0.379, false, 0.0, R::benign, small),
      body("Oberon", 19.2, 75.0, 0.346, false, 0.0, R::benign, small),
      body("Triton", 30.1, 38.0, 0.779, false, 0.0, R::benign, small),
      body("Pluto", 40.0, 40.0, 0.62, false, 0.0, R::benign, small),
      body("Charon", 40.0, 53.0, 0.288, false, 0.0, R::benign, small),
      body("Sedna", 90.0, 30.0, 0.2, false, 0.0, R::benign, small),
      // Neutral body for scaling curves: 1 AU, 300 K background, 1 g.
      body("Reference", 1.0, 300.0, 9.81, false, 0.0, R::benign, big),
  };
  return catalog;
}

namespace {

std::string normalize_name(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ' ' || c == '-' || c == '_') {
      out.push_back('_');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

} // namespace

const Environment* find_environment(const std::vector<Environment>& catalog,
                                    std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& env : catalog) {
    if (normalize_name(env.name) == key) return &env;
  }
  return nullptr;
}

const std::vector<TechnologyFloor>& technology_floors() {
  constexpr double mm = 1e-3;
  static const std::vector<TechnologyFloor> floors = {
      {"uv_imaging", 0.030 * mm, 0.030 * mm, 0.030 * mm, "diffraction"},
      {"optical_imaging", 0.175 * mm, 0.175 * mm, 0.175 * mm, "diffraction"},
      {"ir_imaging", 0.75 * mm, 0.75 * mm, 0.75 * mm, "diffraction, <3 um"},
      {"ir_spectroscopy", 2.4 * mm, 2.4 * mm, 2.4 * mm, "diffraction, <3 um, 100 channels"},
      {"apx", 3.0 * mm, 2.0 * mm, 4.0 * mm, "source K-alpha shielding"},
      {"qcl", 3.0 * mm, 3.0 * mm, 3.0 * mm, "laser length; 4 mW pulsed / 10 uW average"},
      {"gamma_minimal", 5.0 * mm, 5.0 * mm, 5.0 * mm, "major silicate elements, ~1 g detector"},
      {"raman", 8.0 * mm, 8.0 * mm, 8.0 * mm, "diffraction; ~0.1 J optical per spectrum"},
      {"thermal_ir_spectroscopy", 8.0 * mm, 8.0 * mm, 16.0 * mm, "10-20 um, 100 channels"},
      {"gamma_efficient", 12.0 * mm, 12.0 * mm, 12.0 * mm, "15 g+ detector"},
      {"libs", 100.0 * mm, 100.0 * mm, 100.0 * mm, "high pulsed power"},
      {"mass_spectrometry", 100.0 * mm, 100.0 * mm, 100.0 * mm, ""},
      {"rtg_current", 20.0 * mm, 20.0 * mm, 20.0 * mm, "thermal gradient"},
      {"rtg_vacuum", 3.0 * mm, 2.0 * mm, 4.0 * mm, "K-alpha shielding; vacuum only"},
      {"betavoltaic", 0.001 * mm, 0.001 * mm, 0.001 * mm, "5.7 keV beta absorption"},
      {"communication", 1.0 * mm, 1.0 * mm, 1.0 * mm, "receiver thermal expansion"},
      {"computation", 0.2 * mm, 0.2 * mm, 0.2 * mm, "2d integration / power-delay product"},
      {"abrasion", 2.0 * mm, 2.0 * mm, 2.0 * mm, "power limited, 1 AU value"},
      {"microfluidics", 0.1 * mm, 0.1 * mm, 0.1 * mm,
       "liquid range and sample statistics; 100x100x10 um reactor"},
  };
  return floors;
}

const TechnologyFloor& technology_floor(std::string_view name) {
  for (const auto& f : technology_floors()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown technology floor: " + std::string(name));
}

} // namespace microrover
