#include "doctest.h"

#include <string>

#include "microrover/config.hpp"
#include "microrover/errors.hpp"

using namespace microrover;

namespace {

std::string schema_field(const char* text) {
  try {
    parse_config(text);
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<none>";
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("empty document gives defaults") {
  const Config c = parse_config("{}");
  CHECK(c == Config{});
  CHECK(c.scenario.link.frequency == Config{}.scenario.link.frequency);
}

TEST_CASE("round trip is lossless") {
  Config c;
  c.scenario.design.scale = 0.0123456789012345;
  c.scenario.link.frequency = 1.0 / 3.0 * 1e11;
  c.scenario.link.transmitter = TransmitterKind::impatt_gan;
  c.scenario.data.n_rovers = 7;
  c.scenario.dose_margin = 2.5;
  c.orbiter.margin = 1.1;
  c.orbiter.n_dishes = 3;
  const std::string text = serialize_config(c);
  const Config back = parse_config(text);
  CHECK(back == c);
  CHECK(serialize_config(back) == text);
  CHECK(back.scenario.design.scale == c.scenario.design.scale);
  CHECK(back.scenario.link.frequency == c.scenario.link.frequency);
}

TEST_CASE("partial documents override only named fields") {
  const Config c = parse_config(R"({"link": {"frequency": 3e10}, "radiation": {"mission_days": 10}})");
  CHECK(c.scenario.link.frequency == 3e10);
  CHECK(c.scenario.mission_days == 10.0);
  CHECK(c.scenario.design.scale == Config{}.scenario.design.scale);
}

TEST_CASE("hash is stable and tracks values") {
  const Config a;
  CHECK(config_hash(a) == config_hash(Config{}));
  CHECK(config_hash_hex(a).size() == 16);
  Config b;
  b.scenario.store_rate = 101.0;
  CHECK(config_hash(a) != config_hash(b));
  CHECK(config_hash(parse_config(serialize_config(b))) == config_hash(b));
}

TEST_CASE("schema errors name the field") {
  CHECK(schema_field(R"({"lnk": {}})") == "lnk");
  CHECK(schema_field(R"({"link": {"freq": 1}})") == "link.freq");
  CHECK(schema_field(R"({"link": {"frequency": "high"}})") == "link.frequency");
  CHECK(schema_field(R"({"link": {"frequency": -1}})") == "link.frequency");
  CHECK(schema_field(R"({"link": {"transmitter": "laser"}})") == "link.transmitter");
  CHECK(schema_field(R"({"data": {"n_rovers": 2.5}})") == "data.n_rovers");
  CHECK(schema_field(R"({"design": 3})") == "design");
  CHECK(schema_field(R"({"orbiter": {"margin": -1}})") == "orbiter");
  CHECK(schema_field("[1, 2]") == "<document>");
  CHECK(schema_field("{not json") == "<document>");
}

TEST_CASE("transmitter names") {
  for (auto k : {TransmitterKind::amplifier, TransmitterKind::impatt_si_sic,
                 TransmitterKind::impatt_gan}) {
    CHECK(parse_transmitter_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_transmitter_kind("maser").has_value());
}

}
