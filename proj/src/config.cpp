#include "microrover/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "microrover/errors.hpp"

namespace microrover {

using nlohmann::json;

std::optional<TransmitterKind> parse_transmitter_kind(std::string_view s) {
  for (auto k : {TransmitterKind::amplifier, TransmitterKind::impatt_si_sic,
                 TransmitterKind::impatt_gan}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

struct Field {
  const char* section;
  const char* key;
  std::function<json(const Config&)> get;
  std::function<void(Config&, const json&, const std::string&)> set;
};

void need_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "must be a number");
}

template <typename Access>
Field number(const char* section, const char* key, Access access) {
  return {section, key,
          [access](const Config& c) { return json(access(const_cast<Config&>(c))); },
          [access](Config& c, const json& v, const std::string& path) {
            need_number(v, path);
            access(c) = v.get<double>();
          }};
}

template <typename Access>
Field integer(const char* section, const char* key, Access access) {
  return {section, key, [access](const Config& c) { return json(access(const_cast<Config&>(c))); },
          [access](Config& c, const json& v, const std::string& path) {
            if (!v.is_number_integer()) throw SchemaError(path, "must be an integer");
            access(c) = v.get<int>();
          }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f = [] {
    std::vector<Field> v;
    // clang-format off
    v.push_back(number("constants", "boltzmann", [](Config& c) -> double& { return c.scenario.constants.boltzmann; }));
    v.push_back(number("constants", "stefan_boltzmann", [](Config& c) -> double& { return c.scenario.constants.stefan_boltzmann; }));
    v.push_back(number("constants", "speed_of_light", [](Config& c) -> double& { return c.scenario.constants.speed_of_light; }));
    v.push_back(number("constants", "au", [](Config& c) -> double& { return c.scenario.constants.au; }));
    v.push_back(number("constants", "seconds_per_day", [](Config& c) -> double& { return c.scenario.constants.seconds_per_day; }));
    v.push_back(number("constants", "seconds_per_year", [](Config& c) -> double& { return c.scenario.constants.seconds_per_year; }));
    v.push_back(number("constants", "standard_gravity", [](Config& c) -> double& { return c.scenario.constants.standard_gravity; }));
    v.push_back(number("constants", "solar_reference_panel_output", [](Config& c) -> double& { return c.scenario.constants.solar_reference_panel_output; }));

    v.push_back(number("design", "scale", [](Config& c) -> double& { return c.scenario.design.scale; }));
    v.push_back(number("design", "bulk_density", [](Config& c) -> double& { return c.scenario.design.bulk_density; }));
    v.push_back(number("design", "store_mass_fraction", [](Config& c) -> double& { return c.scenario.design.store_mass_fraction; }));
    v.push_back(number("design", "power_volume_fraction", [](Config& c) -> double& { return c.scenario.design.power_volume_fraction; }));
    v.push_back(number("design", "antenna_efficiency", [](Config& c) -> double& { return c.scenario.design.antenna_efficiency; }));

    v.push_back(number("link", "frequency", [](Config& c) -> double& { return c.scenario.link.frequency; }));
    v.push_back(number("link", "receiver_diameter", [](Config& c) -> double& { return c.scenario.link.receiver.diameter; }));
    v.push_back(number("link", "receiver_efficiency", [](Config& c) -> double& { return c.scenario.link.receiver.aperture_efficiency; }));
    v.push_back(number("link", "snr", [](Config& c) -> double& { return c.scenario.link.snr; }));
    v.push_back({"link", "transmitter",
                 [](const Config& c) { return json(std::string(to_string(c.scenario.link.transmitter))); },
                 [](Config& c, const json& j, const std::string& path) {
                   auto k = j.is_string() ? parse_transmitter_kind(j.get<std::string>()) : std::nullopt;
                   if (!k) throw SchemaError(path, "expected amplifier|impatt_si_sic|impatt_gan");
                   c.scenario.link.transmitter = *k;
                 }});

    v.push_back(number("locomotion", "specific_energy", [](Config& c) -> double& { return c.scenario.locomotion.specific_energy; }));
    v.push_back(number("locomotion", "speed_in_lengths", [](Config& c) -> double& { return c.scenario.locomotion.speed_in_lengths; }));
    v.push_back(number("locomotion", "jump_spring_energy", [](Config& c) -> double& { return c.scenario.locomotion.jump_spring_energy; }));
    v.push_back(number("locomotion", "spring_mass_fraction", [](Config& c) -> double& { return c.scenario.locomotion.spring_mass_fraction; }));

    v.push_back(number("compute", "memory_power", [](Config& c) -> double& { return c.scenario.hot_compute.memory_power; }));
    v.push_back(number("compute", "cpu_power_per_block", [](Config& c) -> double& { return c.scenario.hot_compute.cpu_power_per_block; }));
    v.push_back(number("compute", "transistors_per_block", [](Config& c) -> double& { return c.scenario.hot_compute.transistors_per_block; }));
    v.push_back(number("compute", "subsumption_gate_power", [](Config& c) -> double& { return c.scenario.hot_compute.subsumption_gate_power; }));
    v.push_back(number("compute", "transistors_per_gate", [](Config& c) -> double& { return c.scenario.hot_compute.transistors_per_gate; }));

    v.push_back(integer("data", "n_rovers", [](Config& c) -> int& { return c.scenario.data.n_rovers; }));
    v.push_back(number("data", "image_pixels", [](Config& c) -> double& { return c.scenario.data.image_pixels; }));
    v.push_back(number("data", "bits_per_pixel_compressed", [](Config& c) -> double& { return c.scenario.data.bits_per_pixel_compressed; }));
    v.push_back(number("data", "spectral_channels", [](Config& c) -> double& { return c.scenario.data.spectral_channels; }));
    v.push_back(number("data", "bits_per_channel", [](Config& c) -> double& { return c.scenario.data.bits_per_channel; }));
    v.push_back(number("data", "cadence", [](Config& c) -> double& { return c.scenario.data.cadence; }));
    v.push_back(number("data", "store_rate", [](Config& c) -> double& { return c.scenario.store_rate; }));

    v.push_back(number("radiation", "mission_days", [](Config& c) -> double& { return c.scenario.mission_days; }));
    v.push_back(number("radiation", "dose_limit", [](Config& c) -> double& { return c.scenario.dose_limit; }));
    v.push_back(number("radiation", "dose_margin", [](Config& c) -> double& { return c.scenario.dose_margin; }));

    v.push_back(number("orbiter", "dish_diameter", [](Config& c) -> double& { return c.orbiter.dish_diameter; }));
    v.push_back(number("orbiter", "dish_mass", [](Config& c) -> double& { return c.orbiter.dish_mass; }));
    v.push_back(integer("orbiter", "n_dishes", [](Config& c) -> int& { return c.orbiter.n_dishes; }));
    v.push_back(number("orbiter", "subsystem_mass", [](Config& c) -> double& { return c.orbiter.subsystem_mass; }));
    v.push_back(number("orbiter", "panel_mass_per_area", [](Config& c) -> double& { return c.orbiter.panel_mass_per_area; }));
    v.push_back(number("orbiter", "rtg_specific_power", [](Config& c) -> double& { return c.orbiter.rtg_specific_power; }));
    v.push_back(number("orbiter", "rate_per_watt_at_1au", [](Config& c) -> double& { return c.orbiter.rate_per_watt_at_1au; }));
    v.push_back(number("orbiter", "required_rate", [](Config& c) -> double& { return c.orbiter.required_rate; }));
    v.push_back(number("orbiter", "margin", [](Config& c) -> double& { return c.orbiter.margin; }));
    v.push_back(number("orbiter", "min_power_system_mass", [](Config& c) -> double& { return c.orbiter.min_power_system_mass; }));
    // clang-format on
    return v;
  }();
  return f;
}

void validate_config(const Config& c) {
  auto wrap = [](const char* section, auto&& fn) {
    try {
      fn();
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(section, e.what());
    }
  };
  if (!c.scenario.constants.valid()) throw SchemaError("constants", "all constants must be > 0");
  wrap("design", [&] { validate(c.scenario.design); });
  wrap("locomotion", [&] { validate(c.scenario.locomotion); });
  wrap("orbiter", [&] { validate(c.orbiter); });
  const auto& s = c.scenario;
  if (!(s.link.frequency > 0)) throw SchemaError("link.frequency", "must be > 0");
  if (!(s.link.receiver.diameter > 0)) throw SchemaError("link.receiver_diameter", "must be > 0");
  if (!(s.link.receiver.aperture_efficiency > 0 && s.link.receiver.aperture_efficiency <= 1)) {
    throw SchemaError("link.receiver_efficiency", "must be in (0, 1]");
  }
  if (!(s.link.snr > 0)) throw SchemaError("link.snr", "must be > 0");
  if (s.data.n_rovers < 1) throw SchemaError("data.n_rovers", "must be >= 1");
  if (!(s.data.cadence > 0)) throw SchemaError("data.cadence", "must be > 0");
  if (!(s.store_rate > 0)) throw SchemaError("data.store_rate", "must be > 0");
  if (!(s.mission_days > 0)) throw SchemaError("radiation.mission_days", "must be > 0");
  if (!(s.dose_limit > 0)) throw SchemaError("radiation.dose_limit", "must be > 0");
  if (!(s.dose_margin > 0)) throw SchemaError("radiation.dose_margin", "must be > 0");
}

} // namespace

json Config::to_json() const {
  json out = json::object();
  for (const Field& f : fields()) out[f.section][f.key] = f.get(*this);
  return out;
}

Config config_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("<document>", "config must be a JSON object");
  std::map<std::string, std::map<std::string, const Field*>> index;
  for (const Field& f : fields()) index[f.section][f.key] = &f;

  Config c;
  for (const auto& [section, body] : j.items()) {
    auto s = index.find(section);
    if (s == index.end()) throw SchemaError(section, "unknown section");
    if (!body.is_object()) throw SchemaError(section, "must be an object");
    for (const auto& [key, value] : body.items()) {
      const std::string path = section + "." + key;
      auto k = s->second.find(key);
      if (k == s->second.end()) throw SchemaError(path, "unknown key");
      k->second->set(c, value, path);
    }
  }
  validate_config(c);
  return c;
}

Config parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
  return config_from_json(doc);
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("<file>", "cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const Config& c) { return c.to_json().dump(2) + "\n"; }

std::uint64_t config_hash(const Config& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : c.to_json().dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash_hex(const Config& c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash(c)));
  return buf;
}

} // namespace microrover
