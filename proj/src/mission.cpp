#include "microrover/mission.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "microrover/errors.hpp"

namespace microrover {

void validate(const OrbiterModel& m) {
  require_positive(m.dish_diameter, "dish_diameter");
  require_non_negative(m.dish_mass, "dish_mass");
  if (m.n_dishes < 0) throw std::invalid_argument("n_dishes must be non-negative");
  require_non_negative(m.subsystem_mass, "subsystem_mass");
  require_positive(m.panel_mass_per_area, "panel_mass_per_area");
  require_positive(m.rtg_specific_power, "rtg_specific_power");
  require_positive(m.rate_per_watt_at_1au, "rate_per_watt_at_1au");
  require_positive(m.required_rate, "required_rate");
  require_positive(m.margin, "margin");
  require_non_negative(m.min_power_system_mass, "min_power_system_mass");
}

std::string_view to_string(OrbiterPower p) { return p == OrbiterPower::solar ? "solar" : "rtg"; }

std::optional<OrbiterPower> parse_orbiter_power(std::string_view s) {
  if (s == "solar") return OrbiterPower::solar;
  if (s == "rtg") return OrbiterPower::rtg;
  return std::nullopt;
}

OrbiterMass orbiter_mass(const OrbiterModel& m, double earth_distance_au, OrbiterPower power,
                         double solar_reference_output) {
  validate(m);
  require_positive(earth_distance_au, "earth_distance");
  const double d2 = earth_distance_au * earth_distance_au;
  OrbiterMass out;
  out.required_power = m.required_rate / m.rate_per_watt_at_1au * d2;
  out.dishes = m.n_dishes * m.dish_mass;
  out.subsystems = m.subsystem_mass;
  const double raw = power == OrbiterPower::solar
                         ? out.required_power * d2 / solar_reference_output * m.panel_mass_per_area
                         : out.required_power / m.rtg_specific_power;
  out.power_system = std::max(m.min_power_system_mass, raw);
  out.total = (out.dishes + out.subsystems + out.power_system) * m.margin;
  return out;
}

OrbiterMass lightest_orbiter(const OrbiterModel& m, double earth_distance_au,
                             OrbiterPower* chosen) {
  const OrbiterMass solar = orbiter_mass(m, earth_distance_au, OrbiterPower::solar);
  const OrbiterMass rtg = orbiter_mass(m, earth_distance_au, OrbiterPower::rtg);
  const bool use_solar = solar.total <= rtg.total;
  if (chosen) *chosen = use_solar ? OrbiterPower::solar : OrbiterPower::rtg;
  return use_solar ? solar : rtg;
}

double ion_delta_v_per_year(double electrical, double total_mass, double thruster_efficiency,
                            double exhaust_velocity, const Constants& c) {
  require_non_negative(electrical, "electrical");
  require_positive(total_mass, "total_mass");
  require_positive(thruster_efficiency, "thruster_efficiency");
  require_positive(exhaust_velocity, "exhaust_velocity");
  const double accel = 2.0 * thruster_efficiency * electrical / (exhaust_velocity * total_mass);
  return accel * c.seconds_per_year;
}

double landing_propellant(double delivered, double delta_v, double isp_s, const Constants& c) {
  require_non_negative(delivered, "delivered");
  require_non_negative(delta_v, "delta_v");
  require_positive(isp_s, "isp");
  return delivered * std::expm1(delta_v / (c.standard_gravity * isp_s));
}

double stack_mass(const LanderStack& s, const Environment& env) {
  require_non_negative(s.rover_mass, "rover_mass");
  require_non_negative(s.lander_mass, "lander_mass");
  double m = s.rover_mass + s.lander_mass;
  if (s.aeroshell_mass) {
    require_non_negative(*s.aeroshell_mass, "aeroshell_mass");
    m += *s.aeroshell_mass;
  } else if (env.has_atmosphere) {
    m += s.rover_mass + s.lander_mass;
  }
  return m;
}

CampaignMass campaign_mass(const Campaign& campaign, const Constants& c) {
  if (campaign.targets.empty()) throw std::invalid_argument("campaign has no targets");
  require_non_negative(campaign.delta_v, "delta_v");
  require_positive(campaign.isp, "isp");
  CampaignMass out;
  out.mass_ratio = mass_ratio(campaign.delta_v, campaign.isp, c.standard_gravity);
  for (const auto& t : campaign.targets) {
    if (t.n_rovers < 0) throw std::invalid_argument("n_rovers must be non-negative");
    TargetMass tm;
    tm.name = t.environment.name;
    // Earth distance approximated by the body's heliocentric distance.
    const double d = t.environment.solar_distance;
    if (t.orbiter_power) {
      tm.orbiter_power = *t.orbiter_power;
      tm.orbiter = orbiter_mass(campaign.orbiter, d, tm.orbiter_power,
                                c.solar_reference_panel_output).total;
    } else {
      tm.orbiter = lightest_orbiter(campaign.orbiter, d, &tm.orbiter_power).total;
    }
    tm.stacks = t.n_rovers * stack_mass(t.stack, t.environment);
    tm.delivered = tm.orbiter + tm.stacks;
    tm.leo = tm.delivered * out.mass_ratio;
    out.total_leo += tm.leo;
    out.targets.push_back(std::move(tm));
  }
  return out;
}

namespace {

double num(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw SchemaError(key, "must be a number");
  return j.at(key).get<double>();
}

} // namespace

Campaign parse_campaign(std::string_view json_text, const std::vector<Environment>& catalog) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
  if (!doc.is_object()) throw SchemaError("<document>", "campaign must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "delta_v" && key != "isp" && key != "targets") throw SchemaError(key, "unknown key");
  }
  Campaign c;
  c.delta_v = num(doc, "delta_v", c.delta_v);
  c.isp = num(doc, "isp", c.isp);
  if (!(c.delta_v >= 0.0)) throw SchemaError("delta_v", "must be >= 0");
  if (!(c.isp > 0.0)) throw SchemaError("isp", "must be > 0");
  if (!doc.contains("targets") || !doc.at("targets").is_array()) {
    throw SchemaError("targets", "must be an array");
  }
  if (doc.at("targets").empty()) throw SchemaError("targets", "must not be empty");
  for (const auto& j : doc.at("targets")) {
    if (!j.is_object()) throw SchemaError("targets", "entries must be objects");
    for (const auto& [key, _] : j.items()) {
      if (key != "body" && key != "environment" && key != "n_rovers" && key != "rover_mass" &&
          key != "lander_mass" && key != "aeroshell_mass" && key != "orbiter_power") {
        throw SchemaError(key, "unknown key");
      }
    }
    CampaignTarget t;
    if (j.contains("environment")) {
      t.environment = environment_from_json(j.at("environment"));
    } else if (j.contains("body") && j.at("body").is_string()) {
      const std::string name = j.at("body").get<std::string>();
      const Environment* env = find_environment(catalog, name);
      if (!env) throw SchemaError("body", "unknown body '" + name + "'");
      t.environment = *env;
    } else {
      throw SchemaError("body", "each target needs a body name or an environment object");
    }
    const double n = num(j, "n_rovers", 0.0);
    if (!(n >= 0.0) || n != std::floor(n)) {
      throw SchemaError("n_rovers", "must be a non-negative integer");
    }
    t.n_rovers = static_cast<int>(n);
    t.stack.rover_mass = num(j, "rover_mass", t.stack.rover_mass);
    t.stack.lander_mass = num(j, "lander_mass", t.stack.lander_mass);
    if (!(t.stack.rover_mass >= 0.0)) throw SchemaError("rover_mass", "must be >= 0");
    if (!(t.stack.lander_mass >= 0.0)) throw SchemaError("lander_mass", "must be >= 0");
    if (j.contains("aeroshell_mass")) {
      t.stack.aeroshell_mass = num(j, "aeroshell_mass", 0.0);
      if (!(*t.stack.aeroshell_mass >= 0.0)) throw SchemaError("aeroshell_mass", "must be >= 0");
    }
    if (j.contains("orbiter_power")) {
      const auto& p = j.at("orbiter_power");
      auto parsed = p.is_string() ? parse_orbiter_power(p.get<std::string>()) : std::nullopt;
      if (!parsed) throw SchemaError("orbiter_power", "expected solar|rtg");
      t.orbiter_power = parsed;
    }
    c.targets.push_back(std::move(t));
  }
  return c;
}

Campaign builtin_campaign() {
  static const char* const names[] = {
      "Venus",    "Moon dayside", "Mars",   "Phobos",    "Ceres",   "Vesta",  "Io",
      "Europa",   "Ganymede",     "Callisto", "Titan",   "Enceladus", "Rhea", "Dione",
      "Iapetus",  "Titania",      "Oberon", "Triton",    "Pluto",   "Charon"};
  Campaign c;
  for (const char* name : names) {
    CampaignTarget t;
    t.environment = *find_environment(builtin_catalog(), name);
    t.environment.name = std::string(name) == "Moon dayside" ? "Moon" : name;
    t.n_rovers = std::string(name) == "Venus" ? 10 : 50;
    c.targets.push_back(std::move(t));
  }
  return c;
}

} // namespace microrover
