#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "microrover/envelope.hpp"
#include "microrover/mission.hpp"

namespace microrover {

std::optional<TransmitterKind> parse_transmitter_kind(std::string_view s);

// All overridable physical defaults. JSON sections: constants, design, link,
// locomotion, compute, data, radiation, orbiter. Every key is optional;
// unknown sections and keys are rejected with SchemaError.
struct Config {
  Scenario scenario;
  OrbiterModel orbiter;

  bool operator==(const Config& o) const { return to_json() == o.to_json(); }
  nlohmann::json to_json() const;
};

Config parse_config(std::string_view json_text);
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);

// Canonical text: every field, sorted keys, shortest round-trip numbers.
std::string serialize_config(const Config& c);

// FNV-1a over the canonical text.
std::uint64_t config_hash(const Config& c);
std::string config_hash_hex(const Config& c);

} // namespace microrover
