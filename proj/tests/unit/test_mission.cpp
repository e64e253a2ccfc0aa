#include "doctest.h"

#include <cmath>

#include "microrover/errors.hpp"
#include "microrover/mission.hpp"

using namespace microrover;
using doctest::Approx;

namespace {

std::string schema_field(const char* text) {
  try {
    parse_campaign(text, builtin_catalog());
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<none>";
}

} // namespace

TEST_SUITE("mission") {

TEST_CASE("orbiter mass is flat inside 10 AU") {
  OrbiterModel m;
  for (double d = 0.4; d <= 10.0; d *= 1.2) {
    const double total = lightest_orbiter(m, d).total;
    CHECK(total >= 4.0);
    CHECK(total <= 5.5);
  }
  CHECK(orbiter_mass(m, 1.0, OrbiterPower::solar).total == Approx((2.0 + 1.0 + 1.0) * 1.3));
}

TEST_CASE("orbiter power grows as distance squared") {
  OrbiterModel m;
  const auto a = orbiter_mass(m, 100.0, OrbiterPower::rtg);
  const auto b = orbiter_mass(m, 200.0, OrbiterPower::rtg);
  CHECK(b.required_power == Approx(4.0 * a.required_power));
  CHECK(a.required_power == Approx(100.0 / 25000.0 * 1e4));
  const auto far = orbiter_mass(m, 500.0, OrbiterPower::rtg);
  CHECK(far.power_system == Approx(100.0 / 25000.0 * 500.0 * 500.0 / 5.0));
  CHECK(far.total >= 200.0);
  CHECK(far.total <= 450.0);
  // Solar panel mass picks up another d^2.
  const auto s1 = orbiter_mass(m, 60.0, OrbiterPower::solar);
  const auto s2 = orbiter_mass(m, 120.0, OrbiterPower::solar);
  CHECK(s2.power_system == Approx(16.0 * s1.power_system));
}

TEST_CASE("lightest orbiter reports its choice") {
  OrbiterModel m;
  OrbiterPower p = OrbiterPower::solar;
  lightest_orbiter(m, 80.0, &p);
  CHECK(p == OrbiterPower::rtg);
}

TEST_CASE("rocket equation") {
  const double g0 = 9.80665;
  CHECK(mass_ratio(13000.0, 350.0) == Approx(std::exp(13000.0 / (g0 * 350.0))));
  CHECK(mass_ratio(13000.0, 350.0) == Approx(44.15).epsilon(0.01));
  CHECK(mass_ratio(0.0, 300.0) == 1.0);
  CHECK(landing_propellant(1.0, 2000.0, 300.0) ==
        Approx(std::exp(2000.0 / (g0 * 300.0)) - 1.0));
}

TEST_CASE("ion thrust delta-v") {
  const double dv = ion_delta_v_per_year(100.0, 1000.0);
  CHECK(dv == Approx(2.0 * 0.5 * 100.0 / (5e4 * 1000.0) * 3.15576e7));
  CHECK(ion_delta_v_per_year(5.0, 4.0) == Approx(790.0).epsilon(0.01));
  CHECK(ion_delta_v_per_year(10.0, 4.0) == Approx(2.0 * ion_delta_v_per_year(5.0, 4.0)));
  CHECK(ion_delta_v_per_year(100.0, 4.0) / 1e3 == Approx(15.8).epsilon(0.01));
}

TEST_CASE("landing propellant") {
  const double g0 = default_constants().standard_gravity;
  CHECK(landing_propellant(1.0, 0.0, 300.0) == 0.0);
  CHECK(landing_propellant(1.0, g0 * 300.0 * std::log(2.0), 300.0) == Approx(1.0).epsilon(1e-12));
  CHECK(landing_propellant(1.0, 2000.0, 300.0) == Approx(0.974).epsilon(0.002));
  // Convex increasing in delta-v.
  double prev = 0.0, prev_step = 0.0;
  for (double dv = 100.0; dv <= 5000.0; dv += 100.0) {
    const double m = landing_propellant(1.0, dv, 300.0);
    CHECK(m > prev);
    CHECK(m - prev >= prev_step);
    prev_step = m - prev;
    prev = m;
  }
}

TEST_CASE("solar orbiter penalty grows without bound") {
  OrbiterModel m;
  double prev = 0.0;
  for (double d = 20.0; d <= 2000.0; d *= 2.0) {
    const double ratio =
        orbiter_mass(m, d, OrbiterPower::solar).total / orbiter_mass(m, d, OrbiterPower::rtg).total;
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(prev > 1e4);
}

TEST_CASE("lander stacks carry an aeroshell only with an atmosphere") {
  LanderStack s;
  const auto& cat = builtin_catalog();
  CHECK(stack_mass(s, *find_environment(cat, "Moon dayside")) == Approx(0.02));
  CHECK(stack_mass(s, *find_environment(cat, "Mars")) == Approx(0.04));
  s.aeroshell_mass = 0.005;
  CHECK(stack_mass(s, *find_environment(cat, "Mars")) == Approx(0.025));
}

TEST_CASE("orbiter-only target at 1 AU") {
  Campaign c;
  CampaignTarget t;
  t.environment = *find_environment(builtin_catalog(), "Moon dayside");
  c.targets.push_back(t);
  const auto m = campaign_mass(c);
  CHECK(m.total_leo == Approx(5.2 * std::exp(13000.0 / (9.80665 * 350.0))));
}

TEST_CASE("builtin campaign") {
  const Campaign c = builtin_campaign();
  CHECK(c.targets.size() == 20);
  const auto m = campaign_mass(c);
  CHECK(m.total_leo > 1e4 / 3.0);
  CHECK(m.total_leo < 3e4);
  double sum = 0.0;
  for (const auto& t : m.targets) sum += t.leo;
  CHECK(m.total_leo == Approx(sum));
}

TEST_CASE("campaign parsing") {
  const Campaign c = parse_campaign(
      R"({"delta_v": 10000, "targets": [{"body": "europa", "n_rovers": 3, "orbiter_power": "rtg"}]})",
      builtin_catalog());
  REQUIRE(c.targets.size() == 1);
  CHECK(c.delta_v == 10000.0);
  CHECK(c.targets[0].n_rovers == 3);
  CHECK(c.targets[0].orbiter_power == OrbiterPower::rtg);

  CHECK(schema_field(R"({"targets": []})") == "targets");
  CHECK(schema_field(R"({"targets": [{"body": "vulcan"}]})") == "body");
  CHECK(schema_field(R"({"targets": [{"body": "Mars", "n_rovers": 1.5}]})") == "n_rovers");
  CHECK(schema_field(R"({"targets": [{"body": "Mars", "orbiter_power": "fusion"}]})") ==
        "orbiter_power");
  CHECK(schema_field(R"({"isp": 0, "targets": [{"body": "Mars"}]})") == "isp");
  CHECK(schema_field(R"({"budget": 1, "targets": [{"body": "Mars"}]})") == "budget");
}

}
