#include "microrover/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "microrover/errors.hpp"
#include "microrover/interpolation.hpp"

namespace microrover {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string_view to_string(ScaleCategory c) {
  switch (c) {
    case ScaleCategory::sub_mm: return "sub_mm";
    case ScaleCategory::mm_1_to_10: return "mm_1_to_10";
    case ScaleCategory::cm_10_to_100: return "cm_10_to_100";
    case ScaleCategory::over_100mm: return "over_100mm";
  }
  return "sub_mm";
}

ScaleCategory classify_scale(double scale) {
  require_non_negative(scale, "scale");
  if (scale < 1e-3) return ScaleCategory::sub_mm;
  if (scale < 1e-2) return ScaleCategory::mm_1_to_10;
  if (scale < 1e-1) return ScaleCategory::cm_10_to_100;
  return ScaleCategory::over_100mm;
}

std::string_view to_string(Instrument i) {
  switch (i) {
    case Instrument::imaging: return "imaging";
    case Instrument::uv_imaging: return "uv_imaging";
    case Instrument::ir_imaging: return "ir_imaging";
    case Instrument::apx: return "apx";
    case Instrument::ir_spectroscopy: return "ir_spectroscopy";
    case Instrument::thermal_ir_spectroscopy: return "thermal_ir_spectroscopy";
    case Instrument::raman: return "raman";
    case Instrument::qcl: return "qcl";
    case Instrument::gamma_minimal: return "gamma_minimal";
    case Instrument::gamma_efficient: return "gamma_efficient";
    case Instrument::abrasion: return "abrasion";
    case Instrument::libs: return "libs";
    case Instrument::mass_spectrometry: return "mass_spectrometry";
  }
  return "imaging";
}

const std::vector<Instrument>& all_instruments() {
  static const std::vector<Instrument> all = {
      Instrument::imaging,         Instrument::uv_imaging,  Instrument::ir_imaging,
      Instrument::apx,             Instrument::ir_spectroscopy,
      Instrument::thermal_ir_spectroscopy, Instrument::raman, Instrument::qcl,
      Instrument::gamma_minimal,   Instrument::gamma_efficient, Instrument::abrasion,
      Instrument::libs,            Instrument::mass_spectrometry};
  return all;
}

std::optional<Instrument> parse_instrument(std::string_view s) {
  for (Instrument i : all_instruments()) {
    if (to_string(i) == s) return i;
  }
  if (s == "gamma") return Instrument::gamma_minimal;
  return std::nullopt;
}

std::string_view floor_name(Instrument i) {
  switch (i) {
    case Instrument::imaging: return "optical_imaging";
    case Instrument::uv_imaging: return "uv_imaging";
    case Instrument::ir_imaging: return "ir_imaging";
    case Instrument::apx: return "apx";
    case Instrument::ir_spectroscopy: return "ir_spectroscopy";
    case Instrument::thermal_ir_spectroscopy: return "thermal_ir_spectroscopy";
    case Instrument::raman: return "raman";
    case Instrument::qcl: return "qcl";
    case Instrument::gamma_minimal: return "gamma_minimal";
    case Instrument::gamma_efficient: return "gamma_efficient";
    case Instrument::abrasion: return "abrasion";
    case Instrument::libs: return "libs";
    case Instrument::mass_spectrometry: return "mass_spectrometry";
  }
  return "optical_imaging";
}

std::optional<InstrumentModel> powered_model(Instrument i) {
  switch (i) {
    case Instrument::raman: return InstrumentModel::raman();
    case Instrument::qcl: return InstrumentModel::qcl_ir();
    case Instrument::abrasion: return InstrumentModel::abrasion();
    default: return std::nullopt;
  }
}

std::string_view to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::hard_floor: return "hard_floor";
    case ConstraintKind::power_feasibility: return "power_feasibility";
    case ConstraintKind::temp_gate: return "temp_gate";
  }
  return "hard_floor";
}

double body_compute_load(const Environment& env, const Scenario& s, double scale) {
  if (env.surface_temp > kSiliconMaxTemp) {
    return venus_compute_power(kRockyMemoryBits, kRockyTransistors, ComputeStyle::gaas_like,
                               s.hot_compute);
  }
  return compute_load(scale);
}

namespace {

std::optional<double> power_source_floor(PowerKind k) {
  switch (k) {
    case PowerKind::rtg_current: return technology_floor("rtg_current").nominal;
    case PowerKind::rtg_vacuum: return technology_floor("rtg_vacuum").nominal;
    case PowerKind::betavoltaic_current:
    case PowerKind::betavoltaic_theoretical: return technology_floor("betavoltaic").nominal;
    default: return std::nullopt;
  }
}

Constraint floor_constraint(std::string name, double floor) {
  Constraint c;
  c.name = std::move(name);
  c.kind = ConstraintKind::hard_floor;
  c.floor = floor;
  return c;
}

// generated - (compute + extra(L)) at scale L.
Constraint power_constraint(std::string name, const Environment& env, PowerKind power,
                            const Scenario& s, std::function<double(const RoverDesign&)> extra) {
  Constraint c;
  c.name = std::move(name);
  c.kind = ConstraintKind::power_feasibility;
  const RoverDesign probe = s.design;
  const PowerOutput sample = generated_power(probe, env, power, s.constants);
  if (!sample.unavailable.empty()) c.reason = sample.unavailable;
  c.margin = [env, power, s, extra = std::move(extra)](double L) {
    const RoverDesign d = s.design.at_scale(L);
    const PowerOutput gen = generated_power(d, env, power, s.constants);
    const double load = body_compute_load(env, s, L) + extra(d);
    return gen.power - load;
  };
  return c;
}

} // namespace

std::vector<Constraint> build_constraints(const Environment& env, PowerKind power,
                                          const std::vector<Instrument>& instruments,
                                          const Scenario& s) {
  validate(env);
  validate(s.design);
  std::vector<Constraint> out;

  out.push_back(floor_constraint("computation", technology_floor("computation").nominal));

  const double f = link_frequency(s.link, env);
  const double half_wave = 0.5 * s.constants.speed_of_light / f;
  out.push_back(floor_constraint("communication_floor",
                                 std::max(technology_floor("communication").nominal, half_wave)));

  if (auto floor = power_source_floor(power)) {
    Constraint c = floor_constraint("power_source_floor", *floor);
    if (power == PowerKind::rtg_vacuum && env.has_atmosphere) {
      c.reason = "vacuum-insulated RTG cannot run in an atmosphere";
    }
    out.push_back(std::move(c));
  }

  if (power == PowerKind::battery_primary) {
    Constraint c;
    c.name = "battery_temperature";
    c.kind = ConstraintKind::temp_gate;
    const TempGate g = temp_gate(env, temp_window("li_ion"));
    if (!g.pass) {
      std::ostringstream os;
      os << "surface " << env.surface_temp << " K below cell limit (frozen electrolyte)";
      c.reason = os.str();
    }
    out.push_back(std::move(c));
  }

  const double rate = rover_data_requirement(s.data);
  out.push_back(power_constraint("communication", env, power, s, [env, s, rate](const RoverDesign& d) {
    return transmit_power(d, env, s.link, rate, s.constants);
  }));
  out.push_back(power_constraint("locomotion", env, power, s, [s](const RoverDesign& d) {
    return traverse_power(d, s.locomotion);
  }));

  for (Instrument i : instruments) {
    out.push_back(floor_constraint(std::string(to_string(i)) + "_floor",
                                   technology_floor(floor_name(i)).nominal));
    if (auto model = powered_model(i)) {
      const double p = model->hourly_power();
      out.push_back(power_constraint(std::string(to_string(i)) + "_power", env, power, s,
                                     [p](const RoverDesign&) { return p; }));
    }
  }
  return out;
}

ConstraintResult min_feasible_scale(const Constraint& c) {
  ConstraintResult r;
  r.name = c.name;
  r.kind = c.kind;
  if (c.kind != ConstraintKind::power_feasibility) {
    if (c.reason.empty()) {
      r.min_scale = c.floor;
    } else {
      r.note = c.reason;
    }
    return r;
  }

  const Eigen::ArrayXd grid = make_grid(kSearchMin, kSearchMax, kSearchGrid, AxisScale::log);
  Eigen::ArrayXd margin(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) margin(i) = c.margin(grid(i));
  r.margin_at_min = margin(0);
  r.margin_at_max = margin(grid.size() - 1);
  if (!c.reason.empty()) {
    r.note = c.reason;
    return r;
  }
  auto pred = [&](double L) { return c.margin(L) >= 0.0; };

  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    if (margin(i) >= 0.0) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    std::ostringstream os;
    os << "no feasible scale in [" << kSearchMin << ", " << kSearchMax << "] m; margin "
       << r.margin_at_min << " W at low end, " << r.margin_at_max << " W at high end";
    r.note = os.str();
    return r;
  }
  if (first == 0) {
    r.min_scale = grid(0);
    r.at_search_floor = true;
  } else {
    r.min_scale = bisect_boundary_log(pred, grid(first - 1), grid(first), kSearchRelTol);
  }

  for (Eigen::Index j = first + 1; j < grid.size(); ++j) {
    if (margin(j) < 0.0) {
      // Largest feasible scale: boundary of the negated predicate.
      const double lo = grid(j - 1);
      const double hi = grid(j);
      const double cut =
          bisect_boundary_log([&](double L) { return !pred(L); }, lo, hi, kSearchRelTol);
      r.max_scale = cut;
      std::ostringstream os;
      os << "feasibility ends near " << cut << " m";
      r.note = os.str();
      break;
    }
  }
  return r;
}

FeasibilityReport feasibility_report(const Environment& env, PowerKind power,
                                     const std::vector<Instrument>& instruments,
                                     const Scenario& s) {
  FeasibilityReport rep;
  rep.body = env.name;
  rep.power = power;
  rep.instruments = instruments;
  rep.overall_min = 0.0;
  rep.overall_max = kInf;

  for (const Constraint& c : build_constraints(env, power, instruments, s)) {
    ConstraintResult r = min_feasible_scale(c);
    const double m = r.min_scale.value_or(kInf);
    if (m > rep.overall_min || rep.binding.empty()) {
      if (m > rep.overall_min) rep.overall_min = m;
      if (m >= rep.overall_min) rep.binding = r.name;
    }
    if (r.max_scale) rep.overall_max = std::min(rep.overall_max, *r.max_scale);
    if (!r.feasible()) rep.warnings.push_back(r.name + ": infeasible (" + r.note + ")");
    rep.constraints.push_back(std::move(r));
  }

  if (env.surface_temp > kSiliconMaxTemp) {
    std::ostringstream os;
    os << "surface above silicon limit; high-temperature electronics at "
       << body_compute_load(env, s, s.design.scale) << " W assumed";
    rep.warnings.push_back(os.str());
  }
  const double f = link_frequency(s.link, env);
  if (f < s.link.frequency) {
    std::ostringstream os;
    os << "link capped at " << f / units::GHz << " GHz by atmospheric absorption";
    rep.warnings.push_back(os.str());
  }
  if (f > kSubmillimetreFrequency) {
    rep.warnings.push_back("sub-mm link: orbiter dish distortion not modelled");
  }
  if (auto curve = DoseCurve::for_regime(env.radiation_regime)) {
    const ShieldRequirement req =
        mission_shield_requirement(*curve, s.mission_days, s.dose_limit, s.dose_margin);
    rep.shield_requirement = req.shield;
    std::ostringstream os;
    os << "trapped radiation: " << req.shield << " g/cm^2 water-equivalent shielding for a "
       << s.mission_days << " day mission";
    rep.warnings.push_back(os.str());
  }
  if (power == PowerKind::rtg_current && std::isfinite(rep.overall_min)) {
    const RoverDesign d = s.design.at_scale(rep.overall_min);
    if (d.power_source_volume() < kSmallestRtgVolume) {
      rep.warnings.push_back("RTG volume below the smallest built device");
    }
  }

  if (std::isfinite(rep.overall_min) && rep.overall_min <= rep.overall_max) {
    rep.category = classify_scale(rep.overall_min);
  } else if (std::isfinite(rep.overall_min)) {
    std::ostringstream os;
    os << "no feasible window: minimum " << rep.overall_min << " m exceeds maximum "
       << rep.overall_max << " m";
    rep.warnings.push_back(os.str());
  }
  return rep;
}

double measured_data_rate_exponent(const Environment& env, PowerKind power, double lo, double hi,
                                   const Scenario& s, Eigen::Index n) {
  const Eigen::ArrayXd L = make_grid(lo, hi, n, AxisScale::log);
  Eigen::ArrayXd rate(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const RoverDesign d = s.design.at_scale(L(i));
    const PowerOutput gen = generated_power(d, env, power, s.constants);
    if (!gen.unavailable.empty()) throw DomainError(gen.unavailable);
    rate(i) = data_rate_from_power(d, env, s.link, gen.power, s.constants);
  }
  return loglog_slope(L, rate);
}

// ---------------------------------------------------------------------------

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::scale: return "scale";
    case SweepAxis::distance: return "distance";
    case SweepAxis::shield: return "shield";
  }
  return "scale";
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view s) {
  for (auto a : {SweepAxis::scale, SweepAxis::distance, SweepAxis::shield}) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

std::string_view unit_of(SweepAxis a) {
  switch (a) {
    case SweepAxis::scale: return "m";
    case SweepAxis::distance: return "AU";
    case SweepAxis::shield: return "g/cm^2";
  }
  return "";
}

namespace {

struct Resolved {
  Environment env;
  RoverDesign design;
};

Resolved resolve(const SweepSetup& s, const SweepPoint& p) {
  Resolved r{s.environment, s.scenario.design.at_scale(p.scale)};
  if (p.distance) r.env.solar_distance = *p.distance;
  return r;
}

double available_power(const SweepSetup& s, const Resolved& r) {
  const PowerOutput gen = generated_power(r.design, r.env, s.power, s.scenario.constants);
  if (!gen.unavailable.empty()) throw DomainError(gen.unavailable);
  return gen.power - body_compute_load(r.env, s.scenario, r.design.scale);
}

double instrument_time(const SweepSetup& s, const SweepPoint& p, const InstrumentModel& m) {
  const Resolved r = resolve(s, p);
  const double avail = available_power(s, r);
  if (m.kind != InstrumentKind::apx && !(avail > 0.0)) throw DomainError("no spare power");
  const AnalysisTime t =
      analysis_time(m, r.design.scale, std::max(avail, 1e-300), r.design.store_mass());
  if (!t.feasible()) throw DomainError("below lasing threshold without pulse storage");
  return *t.seconds;
}

double store_days(const SweepSetup& s, const SweepPoint& p, const EnergyStore& store) {
  const Resolved r = resolve(s, p);
  const double load = transmit_power(r.design, r.env, s.scenario.link, s.scenario.store_rate,
                                     s.scenario.constants);
  return store_lifetime(r.design, store, load, r.env.surface_temp).seconds / units::day;
}

DoseCurve curve_for(const Environment& env) {
  return DoseCurve::for_regime(env.radiation_regime).value_or(DoseCurve::europa());
}

std::vector<Quantity> make_registry() {
  std::vector<Quantity> q;
  q.push_back({"power", "W", "generated electrical power",
               [](const SweepSetup& s, const SweepPoint& p) {
                 const Resolved r = resolve(s, p);
                 const PowerOutput gen =
                     generated_power(r.design, r.env, s.power, s.scenario.constants);
                 if (!gen.unavailable.empty()) throw DomainError(gen.unavailable);
                 return gen.power;
               }});
  q.push_back({"datarate", "bit/s", "achievable rate from power left after compute",
               [](const SweepSetup& s, const SweepPoint& p) {
                 const Resolved r = resolve(s, p);
                 const double avail = std::max(0.0, available_power(s, r));
                 return data_rate_from_power(r.design, r.env, s.scenario.link, avail,
                                             s.scenario.constants);
               }});
  q.push_back({"comm_power", "W", "transmitter power for the rover data requirement",
               [](const SweepSetup& s, const SweepPoint& p) {
                 const Resolved r = resolve(s, p);
                 return transmit_power(r.design, r.env, s.scenario.link,
                                       rover_data_requirement(s.scenario.data),
                                       s.scenario.constants);
               }});
  q.push_back({"compute_power", "W", "computation load",
               [](const SweepSetup& s, const SweepPoint& p) {
                 const Resolved r = resolve(s, p);
                 return body_compute_load(r.env, s.scenario, r.design.scale);
               }});
  q.push_back({"locomotion_power", "W", "traverse power",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return traverse_power(resolve(s, p).design, s.scenario.locomotion);
               }});
  q.push_back({"battery_life", "day", "battery life transmitting at the store rate",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return store_days(s, p, EnergyStore::battery());
               }});
  q.push_back({"capacitor_life", "day", "thin-film capacitor life transmitting at the store rate",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return store_days(s, p, EnergyStore::capacitor());
               }});
  q.push_back({"analysis_time_apx", "s", "APX integration time",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return instrument_time(s, p, InstrumentModel::apx());
               }});
  q.push_back({"analysis_time_raman", "s", "Raman analysis time on spare power",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return instrument_time(s, p, InstrumentModel::raman());
               }});
  q.push_back({"analysis_time_qcl", "s", "QCL infrared analysis time on spare power",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return instrument_time(s, p, InstrumentModel::qcl_ir());
               }});
  q.push_back({"analysis_time_abrasion", "s", "abrasion time on spare power",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return instrument_time(s, p, InstrumentModel::abrasion());
               }});
  q.push_back({"annual_range", "km", "distance covered in a year",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return annual_range(resolve(s, p).design, s.scenario.locomotion,
                                     s.scenario.constants) /
                        units::km;
               }});
  q.push_back({"jump_height", "m", "spring jump height at the body's gravity",
               [](const SweepSetup& s, const SweepPoint&) {
                 return jump_height(s.scenario.locomotion, s.environment.gravity);
               }});
  q.push_back({"equilibration_time", "s", "radiative time constant at surface temperature",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return equilibration_time(p.scale, s.environment.surface_temp);
               }});
  q.push_back({"orbiter_mass", "kg", "relay orbiter mass against Earth distance",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return orbiter_mass(s.orbiter, p.distance.value_or(s.environment.solar_distance),
                                     s.orbiter_power,
                                     s.scenario.constants.solar_reference_panel_output)
                     .total;
               }});
  q.push_back({"dose_rate", "Gy/day", "trapped-radiation dose rate behind shielding",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return dose_rate(curve_for(s.environment), p.shield, ShieldMaterial::water_equiv);
               }});
  q.push_back({"time_to_dose", "day", "days to the dose limit behind shielding",
               [](const SweepSetup& s, const SweepPoint& p) {
                 return time_to_dose(curve_for(s.environment), p.shield,
                                     ShieldMaterial::water_equiv, s.scenario.dose_limit);
               }});
  return q;
}

size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

} // namespace

const std::vector<Quantity>& quantity_registry() {
  static const std::vector<Quantity> registry = make_registry();
  return registry;
}

const Quantity* find_quantity(std::string_view name) {
  for (const auto& q : quantity_registry()) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

std::vector<std::string> suggest_quantities(std::string_view name, size_t max) {
  std::vector<std::pair<size_t, std::string>> scored;
  for (const auto& q : quantity_registry()) {
    size_t d = edit_distance(name, q.name);
    if (!name.empty() && q.name.find(name) != std::string::npos) d = 0;
    scored.emplace_back(d, q.name);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (size_t i = 0; i < scored.size() && i < max; ++i) out.push_back(scored[i].second);
  return out;
}

std::vector<SweepRow> sweep(const SweepSetup& setup, SweepAxis x, const Quantity& y,
                            const Eigen::ArrayXd& grid, SweepPoint base) {
  if (grid.size() < 1) throw std::invalid_argument("sweep grid is empty");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(grid.size()));
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    SweepPoint p = base;
    switch (x) {
      case SweepAxis::scale: p.scale = grid(i); break;
      case SweepAxis::distance: p.distance = grid(i); break;
      case SweepAxis::shield: p.shield = grid(i); break;
    }
    SweepRow row;
    row.x = grid(i);
    try {
      row.y = y.eval(setup, p);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace microrover
