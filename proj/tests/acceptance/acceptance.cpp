// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "microrover/cli.hpp"
#include "microrover/commlink.hpp"
#include "microrover/config.hpp"
#include "microrover/envelope.hpp"
#include "microrover/gamma.hpp"
#include "microrover/instruments.hpp"
#include "microrover/locomotion.hpp"
#include "microrover/mission.hpp"
#include "microrover/power.hpp"
#include "microrover/radiation.hpp"

using namespace microrover;

namespace {

constexpr double kC = 299792458.0;
constexpr double kYear = 3.15576e7;
constexpr double kDay = 86400.0;

// Collects failed sub-checks for one criterion.
struct Check {
  std::vector<std::string> failures;

  void that(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void rel(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " +-" << tol * 100 << "%";
    that(std::abs(got - want) <= tol * std::abs(want), os.str());
  }
  void factor(double got, double want, double f, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " within x" << f;
    that(got >= want / f && got <= want * f, os.str());
  }
  void range(double got, double lo, double hi, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want [" << lo << ", " << hi << "]";
    that(got >= lo && got <= hi, os.str());
  }
};

const Environment& body(const char* name) { return *find_environment(builtin_catalog(), name); }

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  Eigen::ArrayXd a(x.size()), b(y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    a(i) = x[i];
    b(i) = y[i];
  }
  return loglog_slope(a, b);
}

void criterion1(Check& c) {
  const LinkBudget b = link_budget({0.01, 0.75}, {1.0, 0.75}, 1e-3, kC / 0.01, 1e7, 300.0, 2.0);
  c.rel(b.received_power, 3.46e-18, 0.01, "received power");
  c.rel(b.max_bit_rate, 825.0, 0.02, "max bit rate");
  c.rel(b.bit_rate_at_snr, 413.0, 0.02, "bit rate at SNR 2");
  c.rel(b.tx_gain, 7.4, 0.01, "rover gain");
  c.rel(b.rx_gain, 7.4e4, 0.01, "orbiter gain");
}

void criterion2(Check& c) {
  const std::map<std::string, std::pair<int, int>> printed = {
      {"K", {2, 5}},   {"U", {3, 3}},   {"Th", {2, 2}},   {"Na", {11, 11}}, {"Lu", {29, 29}},
      {"Sm", {22, 22}}, {"Gd", {22, 22}}, {"Ni", {31, -1}}, {"Fe", {2, 8}},   {"Al", {3, 10}},
      {"Ca", {4, 14}}, {"O", {2, 5}},   {"Si", {1, 5}},   {"Ti", {4, 13}}};
  const auto& lines = gamma::lunar_regolith_lines();
  c.that(lines.size() == 14, "14 lines");
  for (const auto& line : lines) {
    auto it = printed.find(line.element);
    if (it == printed.end()) {
      c.that(false, "unexpected element " + line.element);
      continue;
    }
    const long tol = line.element == "Lu" ? 2 : 1;
    for (int pass = 0; pass < 2; ++pass) {
      const int want = pass == 0 ? it->second.first : it->second.second;
      const auto r = gamma::detection_error(line, 1.0, kDay, {pass == 0 ? 1.0 : 0.1});
      const std::string tag = line.element + (pass == 0 ? " at 100%" : " at 10%");
      if (want < 0) {
        c.that(!r.detectable(), tag + " should be not detectable");
      } else if (!r.detectable()) {
        c.that(false, tag + " not detectable");
      } else {
        c.that(std::labs(gamma::round_percent(*r.error_percent) - want) <= tol, tag);
      }
    }
  }
}

void criterion3(Check& c) {
  static const double printed[][3] = {
      {0.2, 0.03, -1}, {0.3, 0.06, -1}, {0.4, 0.08, -1}, {0.5, 0.11, -1},
      {0.7, 0.16, -1}, {0.8, 0.20, -1}, {0.9, 0.22, -1}, {1.1, 0.31, 0.31},
      {1.3, 0.41, 0.41}, {1.4, 0.44, 0.44}, {1.5, 0.47, 0.47}, {1.7, 0.53, 0.08},
      {1.8, 0.56, 0.09}, {1.9, 0.59, 0.11}, {2.3, 0.72, 0.14}, {4.5, 1.09, 0.55}};
  const auto& t = gamma::high_z_attenuation();
  const auto mat = gamma::DetectorMaterial::hgi2();
  c.that(t.rows().size() == std::size(printed), "row count");
  for (const auto& p : printed) {
    const std::string tag = std::to_string(p[0]) + " MeV";
    const double pe = t.min_thickness(p[0], gamma::Mechanism::photoelectric);
    const double pe_cm = gamma::thickness_cm(pe, mat);
    c.that(std::abs(pe_cm - pe / 6.4) <= 1e-12, tag + " photoelectric /6.4");
    c.that(std::abs(pe_cm - p[1]) <= 0.01 + 1e-9, tag + " photoelectric printed");
    if (p[2] >= 0) {
      const double pp = t.min_thickness(p[0], gamma::Mechanism::pair);
      const double pp_cm = gamma::thickness_cm(pp, mat);
      c.that(std::abs(pp_cm - pp / 6.4) <= 1e-12, tag + " pair /6.4");
      c.that(std::abs(pp_cm - p[2]) <= 0.01 + 1e-9, tag + " pair printed");
    }
  }
}

void criterion4(Check& c) {
  const auto tech = TransmitterTech::impatt_si_sic();
  const double far = required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 100.0, 300e9, 1e7,
                                                  300.0, 2.0, tech);
  const double near = required_tx_electrical_power({0.01, 0.75}, {1.0, 0.75}, 100.0, 300e9, 2e6,
                                                   300.0, 2.0, tech);
  c.rel(far, 10e-6, 0.10, "electrical power at 1e4 km");
  c.rel(near, 0.04 * far, 1e-12, "electrical power at 2e3 km");
}

void criterion5(Check& c) {
  const Environment& ref = body("Reference");
  const LinkConfig link;
  auto life = [&](double L, const EnergyStore& s) {
    RoverDesign d;
    d.scale = L;
    return store_lifetime(d, s, transmit_power(d, ref, link, 100.0), ref.surface_temp).seconds;
  };
  c.factor(life(0.01, EnergyStore::battery()), 2.0 * kYear, 1.5, "battery at 1 cm");
  c.factor(life(0.0055, EnergyStore::battery()), kYear / 12.0, 1.5, "battery at 5.5 mm");
  c.factor(life(0.015, EnergyStore::capacitor()), kDay, 1.5, "capacitor at 1.5 cm");
  c.factor(life(0.045, EnergyStore::capacitor()), kYear, 1.5, "capacitor at 4.5 cm");
  for (const auto& store : {EnergyStore::battery(), EnergyStore::capacitor()}) {
    std::vector<double> x, y;
    for (double L = 0.004; L <= 0.06; L *= 1.25) {
      x.push_back(L);
      y.push_back(life(L, store));
    }
    const double s = slope(x, y);
    c.that(std::abs(s - 5.0) <= 0.1, std::string(to_string(store.kind)) + " life slope " +
                                         std::to_string(s));
  }
}

void criterion6(Check& c) {
  RoverDesign d;
  c.rel(annual_range(d.at_scale(1e-3)), 3e3, 0.10, "range at 1 mm");
  c.rel(annual_range(d.at_scale(0.1)), 3e5, 0.10, "range at 10 cm");

  const auto apx = InstrumentModel::apx();
  const double t1 = *analysis_time(apx, 0.01, 1.0).seconds;
  for (double k : {0.5, 2.0, 3.0, 10.0}) {
    const double tk = *analysis_time(apx, 0.01 * k, 1.0).seconds;
    c.rel(tk, t1 * k * k, 1e-12, "APX quadratic x" + std::to_string(k));
  }

  const auto raman = analysis_time(InstrumentModel::raman(), 0.01, 0.3e-3, 1e-3);
  c.that(raman.feasible(), "Raman feasible at 0.3 mW");
  if (raman.feasible()) c.rel(*raman.seconds, 3600.0, 1e-12, "Raman time at 0.3 mW");

  const auto ab = analysis_time(InstrumentModel::abrasion(), 0.01, 1.5e-3);
  c.that(ab.feasible(), "abrasion feasible at 1.5 mW");
  if (ab.feasible()) c.rel(*ab.seconds, 3600.0, 0.15, "abrasion time at 1.5 mW");
}

void criterion7(Check& c) {
  const auto eu = DoseCurve::europa();
  const double knots[][2] = {{0.1, 2e4}, {1.0, 3e3}, {10.0, 80.0}};
  for (const auto& k : knots) {
    const double per30 = dose_rate(eu, k[0], ShieldMaterial::water_equiv) * 30.0;
    c.rel(per30, k[1], 1e-12, "Europa knot " + std::to_string(k[0]));
  }
  c.factor(mission_shield_requirement(eu, 1000.0, 1e6).shield, 0.2, 1.5, "Europa shield");
  c.factor(mission_shield_requirement(DoseCurve::io(), 1000.0, 1e6).shield, 2.0, 1.5,
           "Io shield");
}

void criterion8(Check& c) {
  const OrbiterModel m;
  for (double d = 0.3; d <= 10.0; d *= 1.1) {
    c.range(lightest_orbiter(m, d).total, 4.0, 5.5, "orbiter at " + std::to_string(d) + " AU");
  }
  c.range(lightest_orbiter(m, 10.0).total, 4.0, 5.5, "orbiter at 10 AU");
  c.range(orbiter_mass(m, 500.0, OrbiterPower::rtg).total, 200.0, 450.0, "RTG orbiter at 500 AU");
}

void criterion9(Check& c) {
  const double lo = std::log(kSearchMin), hi = std::log(kSearchMax);
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) grid.push_back(std::exp(lo + (hi - lo) * i / 199.0));

  int solved = 0;
  for (const auto& env : builtin_catalog()) {
    for (PowerKind p : kAllPowerKinds) {
      for (const auto& con : build_constraints(env, p, all_instruments())) {
        const auto r = min_feasible_scale(con);
        const std::string tag = env.name + "/" + std::string(to_string(p)) + "/" + con.name;
        if (con.kind != ConstraintKind::power_feasibility) {
          if (con.kind == ConstraintKind::hard_floor && con.reason.empty()) {
            c.that(r.min_scale && *r.min_scale == con.floor, tag + " floor");
          }
          continue;
        }
        if (!con.reason.empty()) {
          c.that(!r.feasible(), tag + " should be unavailable");
          continue;
        }
        int first = -1;
        for (int i = 0; i < 200 && first < 0; ++i) {
          if (con.margin(grid[i]) >= 0.0) first = i;
        }
        if (first < 0) {
          c.that(!r.feasible(), tag + " grid finds no feasible scale");
          continue;
        }
        ++solved;
        if (!r.feasible()) {
          c.that(false, tag + " bisection missed a feasible scale");
        } else if (first == 0) {
          c.that(std::abs(*r.min_scale - grid[0]) <= 1e-12 * grid[0], tag + " at search floor");
        } else {
          c.that(*r.min_scale >= grid[first - 1] && *r.min_scale <= grid[first],
                 tag + " outside oracle cell");
        }
      }
    }
  }
  c.that(solved > 100, "too few solved constraints: " + std::to_string(solved));

  const auto venus = feasibility_report(body("Venus"), PowerKind::rtg_current, {});
  c.that(venus.overall_min >= 0.06, "Venus RTG minimum " + std::to_string(venus.overall_min));

  const auto ref = feasibility_report(body("Reference"), PowerKind::rtg_current, {});
  for (const auto& r : ref.constraints) {
    if (r.name == "communication") {
      c.that(r.feasible(), "RTG comm feasible");
      if (r.feasible()) c.factor(*r.min_scale, 3e-3, 1.5, "RTG comm minimum");
    }
  }

  c.that(classify_scale(std::nextafter(1e-3, 0.0)) == ScaleCategory::sub_mm, "below 1 mm");
  c.that(classify_scale(1e-3) == ScaleCategory::mm_1_to_10, "at 1 mm");
  c.that(classify_scale(std::nextafter(10e-3, 0.0)) == ScaleCategory::mm_1_to_10, "below 10 mm");
  c.that(classify_scale(10e-3) == ScaleCategory::cm_10_to_100, "at 10 mm");
  c.that(classify_scale(std::nextafter(100e-3, 0.0)) == ScaleCategory::cm_10_to_100,
         "below 100 mm");
  c.that(classify_scale(100e-3) == ScaleCategory::over_100mm, "at 100 mm");
}

void criterion10(Check& c) {
  const std::vector<std::vector<std::string>> commands = {
      {"table2"},
      {"table2", "--format", "json"},
      {"table4"},
      {"gamma"},
      {"sweep", "--y", "battery_life", "--power", "rtg_current"},
      {"sweep", "--x", "distance", "--y", "orbiter_mass", "--format", "json"},
      {"feasibility", "--body", "Europa", "--instruments", "imaging,raman,abrasion"},
      {"feasibility", "--body", "Venus", "--power", "rtg_current"},
      {"campaign"},
      {"bodies"},
      {"config"}};
  for (const auto& args : commands) {
    std::ostringstream o1, e1, o2, e2;
    const int r1 = run_cli(args, o1, e1);
    const int r2 = run_cli(args, o2, e2);
    std::string tag;
    for (const auto& a : args) tag += a + " ";
    c.that(r1 == kExitOk, tag + "exit " + std::to_string(r1));
    c.that(r1 == r2 && o1.str() == o2.str() && e1.str() == e2.str(), tag + "not byte-identical");
  }

  Config cfg;
  cfg.scenario.design.scale = 0.0137;
  cfg.scenario.link.frequency = 2.0 / 3.0 * 1e11;
  cfg.scenario.link.transmitter = TransmitterKind::impatt_gan;
  cfg.scenario.dose_margin = 2.0;
  cfg.orbiter.n_dishes = 1;
  const std::string text = serialize_config(cfg);
  const Config back = parse_config(text);
  c.that(back == cfg, "config round trip");
  c.that(serialize_config(back) == text, "config text round trip");
  c.that(config_hash(back) == config_hash(cfg), "config hash round trip");
  c.that(serialize_config(parse_config(serialize_config(Config{}))) == serialize_config(Config{}),
         "default config round trip");
}

} // namespace

int main() {
  using Fn = void (*)(Check&);
  const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,  criterion5,
                         criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (int i = 0; i < 10; ++i) {
    Check c;
    try {
      criteria[i](c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s\n", i + 1, c.failures.empty() ? "PASS" : "FAIL");
    for (const auto& f : c.failures) std::printf("  %s\n", f.c_str());
    if (!c.failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
