#include "doctest.h"

#include <cmath>
#include <vector>

#include "microrover/envelope.hpp"

using namespace microrover;
using doctest::Approx;

namespace {

const Environment& body(const char* name) { return *find_environment(builtin_catalog(), name); }

// First grid index where the margin is non-negative, on an independently built
// 200-point log grid.
struct GridScan {
  std::vector<double> x;
  int first = -1;
};

GridScan scan(const Constraint& c) {
  GridScan g;
  const double lo = std::log(kSearchMin), hi = std::log(kSearchMax);
  for (int i = 0; i < 200; ++i) {
    g.x.push_back(std::exp(lo + (hi - lo) * i / 199.0));
    if (g.first < 0 && c.margin(g.x.back()) >= 0.0) g.first = i;
  }
  return g;
}

const ConstraintResult& find(const FeasibilityReport& r, const std::string& name) {
  for (const auto& c : r.constraints) {
    if (c.name == name) return c;
  }
  FAIL("missing constraint " << name);
  return r.constraints.front();
}

} // namespace

TEST_SUITE("envelope") {

TEST_CASE("category boundaries are closed-open") {
  CHECK(classify_scale(0.999e-3) == ScaleCategory::sub_mm);
  CHECK(classify_scale(1e-3) == ScaleCategory::mm_1_to_10);
  CHECK(classify_scale(9.999e-3) == ScaleCategory::mm_1_to_10);
  CHECK(classify_scale(10e-3) == ScaleCategory::cm_10_to_100);
  CHECK(classify_scale(99.99e-3) == ScaleCategory::cm_10_to_100);
  CHECK(classify_scale(100e-3) == ScaleCategory::over_100mm);
  CHECK(classify_scale(5.0) == ScaleCategory::over_100mm);
}

TEST_CASE("instrument names round trip") {
  for (Instrument i : all_instruments()) CHECK(parse_instrument(to_string(i)) == i);
  CHECK(parse_instrument("gamma") == Instrument::gamma_minimal);
  CHECK_FALSE(parse_instrument("tricorder").has_value());
}

TEST_CASE("bisection agrees with the grid scan") {
  for (const char* name : {"Mars", "Europa", "Pluto", "Venus", "Titan", "Reference"}) {
    for (PowerKind p : {PowerKind::solar, PowerKind::rtg_current, PowerKind::betavoltaic_current}) {
      const auto cs = build_constraints(body(name), p, {Instrument::raman, Instrument::abrasion});
      for (const auto& c : cs) {
        if (c.kind != ConstraintKind::power_feasibility || !c.reason.empty()) continue;
        CAPTURE(name);
        CAPTURE(c.name);
        const GridScan g = scan(c);
        const ConstraintResult r = min_feasible_scale(c);
        REQUIRE(r.feasible() == (g.first >= 0));
        if (g.first < 0) continue;
        if (g.first == 0) {
          CHECK(*r.min_scale == Approx(kSearchMin));
        } else {
          CHECK(*r.min_scale >= g.x[g.first - 1]);
          CHECK(*r.min_scale <= g.x[g.first]);
        }
      }
    }
  }
}

TEST_CASE("hard floors are returned directly") {
  const auto rep = feasibility_report(body("Mars"), PowerKind::solar, {Instrument::raman});
  CHECK(*find(rep, "raman_floor").min_scale == Approx(8e-3));
  CHECK(*find(rep, "computation").min_scale == Approx(0.2e-3));
  const auto rtg = feasibility_report(body("Mars"), PowerKind::rtg_current, {Instrument::raman});
  CHECK(*find(rtg, "raman_floor").min_scale == Approx(8e-3));
}

TEST_CASE("communication minimum for an RTG rover") {
  const auto rep = feasibility_report(body("Reference"), PowerKind::rtg_current, {});
  const double comm = *find(rep, "communication").min_scale;
  CHECK(comm >= 3e-3 / 1.5);
  CHECK(comm <= 3e-3 * 1.5);
  CHECK(rep.binding == "power_source_floor");
  CHECK(rep.overall_min == Approx(20e-3));
}

TEST_CASE("Venus with an RTG needs at least 6 cm") {
  const auto rep = feasibility_report(body("Venus"), PowerKind::rtg_current, {});
  REQUIRE(rep.feasible());
  CHECK(rep.overall_min >= 0.06);
  CHECK(*find(rep, "communication_floor").min_scale > 5e-3);
  bool hot = false, cap = false;
  for (const auto& w : rep.warnings) {
    hot = hot || w.find("silicon") != std::string::npos;
    cap = cap || w.find("20 GHz") != std::string::npos;
  }
  CHECK(hot);
  CHECK(cap);
}

TEST_CASE("Mars solar with imaging, APX and IR spectroscopy") {
  const auto rep = feasibility_report(
      body("Mars"), PowerKind::solar,
      {Instrument::imaging, Instrument::apx, Instrument::ir_spectroscopy});
  REQUIRE(rep.feasible());
  CHECK(rep.overall_min >= 2.4e-3);
  CHECK(rep.overall_min <= 4e-3);
  CHECK(rep.category == ScaleCategory::mm_1_to_10);
}

TEST_CASE("Pluto on solar power is feasible at 1 cm") {
  const auto rep = feasibility_report(body("Pluto"), PowerKind::solar, {Instrument::imaging});
  REQUIRE(rep.feasible());
  CHECK(rep.overall_min <= 0.01);
  CHECK(rep.overall_max >= 0.01);
}

TEST_CASE("solar abrasion and Raman power at 5 to 10 AU is centimetre scale") {
  for (const char* name : {"Europa", "Titan"}) {
    const auto rep =
        feasibility_report(body(name), PowerKind::solar, {Instrument::raman, Instrument::abrasion});
    for (const char* c : {"raman_power", "abrasion_power"}) {
      CAPTURE(name);
      CAPTURE(c);
      const auto& r = find(rep, c);
      REQUIRE(r.feasible());
      CHECK(*r.min_scale >= 0.01 / 3.0);
      CHECK(*r.min_scale <= 0.01 * 3.0);
    }
  }
}

TEST_CASE("adding instruments never lowers the minimum") {
  const auto& all = all_instruments();
  for (const char* name : {"Mars", "Europa", "Moon dayside"}) {
    std::vector<Instrument> set;
    double prev = feasibility_report(body(name), PowerKind::solar, set).overall_min;
    for (Instrument i : all) {
      set.push_back(i);
      const double now = feasibility_report(body(name), PowerKind::solar, set).overall_min;
      CHECK(now >= prev);
      prev = now;
    }
  }
}

TEST_CASE("infeasible constraints are reported without aborting") {
  const auto rep = feasibility_report(body("Mars"), PowerKind::rtg_vacuum, {});
  CHECK_FALSE(rep.feasible());
  CHECK(std::isinf(rep.overall_min));
  CHECK_FALSE(find(rep, "power_source_floor").feasible());
  CHECK(rep.constraints.size() >= 4);

  const auto cold = feasibility_report(body("Pluto"), PowerKind::battery_primary, {});
  CHECK_FALSE(find(cold, "battery_temperature").feasible());
}

TEST_CASE("infeasible power constraint carries the end margins") {
  Constraint c;
  c.name = "never";
  c.kind = ConstraintKind::power_feasibility;
  c.margin = [](double L) { return -1.0 - L; };
  const auto r = min_feasible_scale(c);
  CHECK_FALSE(r.feasible());
  CHECK(r.margin_at_min == Approx(-1.0 - kSearchMin));
  CHECK(r.margin_at_max == Approx(-2.0));
  CHECK(r.note.find("no feasible scale") != std::string::npos);
}

TEST_CASE("windowed constraint reports its upper end") {
  Constraint c;
  c.name = "window";
  c.kind = ConstraintKind::power_feasibility;
  c.margin = [](double L) { return (L - 2e-3) * (5e-2 - L); };
  const auto r = min_feasible_scale(c);
  REQUIRE(r.feasible());
  CHECK(*r.min_scale == Approx(2e-3).epsilon(2e-3));
  REQUIRE(r.max_scale.has_value());
  CHECK(*r.max_scale == Approx(5e-2).epsilon(2e-3));
}

TEST_CASE("RTG data rate exponent") {
  const double s = measured_data_rate_exponent(body("Reference"), PowerKind::rtg_vacuum, 0.01, 0.1);
  CHECK(s == Approx(5.0).epsilon(0.02));
}

TEST_CASE("APX analysis time is quadratic in scale") {
  SweepSetup setup{body("Mars"), PowerKind::solar, {}, {}, OrbiterPower::rtg};
  const Quantity* q = find_quantity("analysis_time_apx");
  REQUIRE(q);
  Eigen::ArrayXd grid(5);
  grid << 0.003, 0.01, 0.03, 0.1, 0.3;
  const auto rows = sweep(setup, SweepAxis::scale, *q, grid);
  Eigen::ArrayXd y(5);
  for (int i = 0; i < 5; ++i) {
    REQUIRE(rows[i].y.has_value());
    y(i) = *rows[i].y;
  }
  CHECK(std::abs(loglog_slope(grid, y)) == Approx(2.0).epsilon(1e-9));
}

TEST_CASE("single-point sweep of a constant") {
  SweepSetup setup{body("Europa"), PowerKind::solar, {}, {}, OrbiterPower::rtg};
  const Quantity* q = find_quantity("jump_height");
  REQUIRE(q);
  Eigen::ArrayXd grid(1);
  grid << 0.02;
  const auto rows = sweep(setup, SweepAxis::scale, *q, grid);
  REQUIRE(rows.size() == 1);
  CHECK(*rows[0].y == Approx(q->eval(setup, {})));
}

TEST_CASE("sweep records errors per row and continues") {
  SweepSetup setup{body("Reference"), PowerKind::solar, {}, {}, OrbiterPower::rtg};
  const Quantity* q = find_quantity("orbiter_mass");
  REQUIRE(q);
  Eigen::ArrayXd grid(3);
  grid << 1.0, -1.0, 500.0;
  const auto rows = sweep(setup, SweepAxis::distance, *q, grid);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].y.has_value());
  CHECK_FALSE(rows[1].y.has_value());
  CHECK_FALSE(rows[1].error.empty());
  CHECK(*rows[2].y == Approx(263.9).epsilon(0.01));
}

TEST_CASE("quantity registry and suggestions") {
  CHECK(quantity_registry().size() >= 17);
  for (const auto& q : quantity_registry()) CHECK(find_quantity(q.name) == &q);
  CHECK(find_quantity("nope") == nullptr);
  const auto s = suggest_quantities("batery_life");
  REQUIRE_FALSE(s.empty());
  CHECK(s.front() == "battery_life");
}

TEST_CASE("sweep axes") {
  for (SweepAxis a : {SweepAxis::scale, SweepAxis::distance, SweepAxis::shield}) {
    CHECK(parse_sweep_axis(to_string(a)) == a);
  }
  CHECK_FALSE(parse_sweep_axis("time").has_value());
}

}
