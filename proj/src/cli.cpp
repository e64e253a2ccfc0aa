#include "microrover/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "microrover/config.hpp"
#include "microrover/envelope.hpp"
#include "microrover/errors.hpp"
#include "microrover/gamma.hpp"
#include "microrover/output.hpp"

namespace microrover {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config_path;
  std::string catalog_path;
  std::string format = "csv";
  std::string out_path;
};

struct Context {
  Config config;
  std::vector<Environment> catalog;
  OutputFormat format = OutputFormat::csv;
  std::string hash;
};

Context make_context(const Common& c) {
  Context ctx;
  std::string path = c.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("MICROROVER_CONFIG")) path = env;
  }
  if (!path.empty()) ctx.config = load_config(path);
  ctx.catalog = c.catalog_path.empty() ? builtin_catalog() : load_catalog(c.catalog_path);
  ctx.format = c.format == "json" ? OutputFormat::json : OutputFormat::csv;
  ctx.hash = config_hash_hex(ctx.config);
  return ctx;
}

Table new_table(const Context& ctx, const std::string& command) {
  Table t;
  t.meta = {{"tool", std::string("microrover ") + kVersion},
            {"command", command},
            {"config_hash", ctx.hash}};
  return t;
}

const Environment& lookup_body(const Context& ctx, const std::string& name) {
  if (const Environment* env = find_environment(ctx.catalog, name)) return *env;
  std::string names;
  for (const auto& e : ctx.catalog) names += (names.empty() ? "" : ", ") + e.name;
  throw UsageError("unknown body '" + name + "'; catalog: " + names);
}

PowerKind lookup_power(const std::string& name) {
  if (auto k = parse_power_kind(name)) return *k;
  std::string names;
  for (PowerKind k : kAllPowerKinds) names += (names.empty() ? "" : ", ") + std::string(to_string(k));
  throw UsageError("unknown power source '" + name + "'; expected one of: " + names);
}

bool within_rel(double value, double expected, double tol) {
  return std::abs(value - expected) <= tol * std::abs(expected);
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// --- table2 -----------------------------------------------------------------

struct Table2Flags {
  double range = 1e7;
  double wavelength = 0.01;
  double rf_power = 1e-3;
  double temperature = 300.0;
  double tx_diameter = 0.01;
  double rx_diameter = 1.0;
  double efficiency = 0.75;
  double electrical_efficiency = 0.5;
  double snr = 2.0;

  bool is_reference() const { return *this == Table2Flags{}; }
  bool operator==(const Table2Flags&) const = default;
};

int cmd_table2(const Context& ctx, const Table2Flags& f, Table& t) {
  const Constants& c = ctx.config.scenario.constants;
  const double freq = c.speed_of_light / f.wavelength;
  const LinkBudget b = link_budget({f.tx_diameter, f.efficiency}, {f.rx_diameter, f.efficiency},
                                   f.rf_power, freq, f.range, f.temperature, f.snr, c);
  const double electrical = f.rf_power / f.electrical_efficiency;
  const double rate_per_mw_electrical = b.bit_rate_at_snr * (1e-3 / electrical);

  struct Row {
    const char* name;
    const char* unit;
    double value;
    double printed;
    double tol;
  };
  const Row rows[] = {
      {"wavelength", "m", b.wavelength, 0.01, 0.01},
      {"tx_gain", "1", b.tx_gain, 7.4, 0.01},
      {"rx_gain", "1", b.rx_gain, 7.4e4, 0.01},
      {"range", "m", f.range, 1e7, 0.0},
      {"rf_power", "W", f.rf_power, 1e-3, 0.0},
      {"free_space_loss", "1", b.free_space_loss, 1.6e20, 0.05},
      {"received_power", "W", b.received_power, 3.46e-18, 0.01},
      {"receiver_temperature", "K", f.temperature, 300.0, 0.0},
      {"noise_density", "J", b.noise_density, 4.2e-21, 0.025},
      {"max_bit_rate", "bit/s", b.max_bit_rate, 825.0, 0.02},
      {"bit_rate_at_snr", "bit/s", b.bit_rate_at_snr, 413.0, 0.02},
      {"bit_rate_per_mw_electrical", "bit/s", rate_per_mw_electrical, 200.0, 0.1},
  };
  t.columns = {{"quantity", ""}, {"unit", ""},         {"computed", "see unit"},
               {"printed", "see unit"}, {"tolerance", "1"}, {"status", ""}};
  const bool compare = f.is_reference();
  bool all_ok = true;
  for (const Row& r : rows) {
    if (compare) {
      const bool ok = within_rel(r.value, r.printed, r.tol);
      all_ok = all_ok && ok;
      t.add_row({std::string(r.name), std::string(r.unit), r.value, r.printed, r.tol, pass_fail(ok)});
    } else {
      t.add_row({std::string(r.name), std::string(r.unit), r.value, {}, {}, std::string("n/a")});
    }
  }
  if (!compare) t.meta.emplace_back("comparison", "skipped: inputs differ from the printed budget");
  return all_ok ? kExitOk : kExitCheckFailed;
}

// --- table4 -----------------------------------------------------------------

int cmd_table4(const Context&, Table& t) {
  // Printed cm-of-HgI2 columns: {energy, photoelectric, pair (<0: none)}.
  static const double printed[][3] = {
      {0.2, 0.03, -1}, {0.3, 0.06, -1}, {0.4, 0.08, -1}, {0.5, 0.11, -1},
      {0.7, 0.16, -1}, {0.8, 0.20, -1}, {0.9, 0.22, -1}, {1.1, 0.31, 0.31},
      {1.3, 0.41, 0.41}, {1.4, 0.44, 0.44}, {1.5, 0.47, 0.47}, {1.7, 0.53, 0.08},
      {1.8, 0.56, 0.09}, {1.9, 0.59, 0.11}, {2.3, 0.72, 0.14}, {4.5, 1.09, 0.55}};
  const auto mat = gamma::DetectorMaterial::hgi2();
  const auto& table = gamma::high_z_attenuation();
  t.columns = {{"energy", "MeV"},          {"photoelectric", "g/cm^2"},
               {"photoelectric_hgi2", "cm"}, {"photoelectric_printed", "cm"},
               {"pair", "g/cm^2"},          {"pair_hgi2", "cm"},
               {"pair_printed", "cm"},      {"status", ""}};
  bool all_ok = true;
  for (const auto& p : printed) {
    const double e = p[0];
    const double pe = table.min_thickness(e, gamma::Mechanism::photoelectric);
    const double pe_cm = gamma::thickness_cm(pe, mat);
    bool ok = std::abs(pe_cm - p[1]) <= 0.01 + 1e-9;
    Cell pair{}, pair_cm{}, pair_printed{};
    if (p[2] >= 0) {
      const double pp = table.min_thickness(e, gamma::Mechanism::pair);
      const double pp_cm = gamma::thickness_cm(pp, mat);
      ok = ok && std::abs(pp_cm - p[2]) <= 0.01 + 1e-9;
      pair = pp;
      pair_cm = pp_cm;
      pair_printed = p[2];
    }
    all_ok = all_ok && ok;
    t.add_row({e, pe, pe_cm, p[1], pair, pair_cm, pair_printed, pass_fail(ok)});
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

// --- gamma ------------------------------------------------------------------

struct GammaFlags {
  double area = 1.0;  // cm^2
  double hours = 24.0;
  std::string model = "both";
  double efficiency = 0.1;
  std::string lines_path;
};

int cmd_gamma(const Context&, const GammaFlags& f, Table& t) {
  // Printed % errors for the lunar line list: {100%, 10%}; -1 = not detectable.
  static const std::vector<std::pair<std::string, std::pair<int, int>>> printed = {
      {"K", {2, 5}},   {"U", {3, 3}},   {"Th", {2, 2}},   {"Na", {11, 11}}, {"Lu", {29, 29}},
      {"Sm", {22, 22}}, {"Gd", {22, 22}}, {"Ni", {31, -1}}, {"Fe", {2, 8}},   {"Al", {3, 10}},
      {"Ca", {4, 14}}, {"O", {2, 5}},   {"Si", {1, 5}},   {"Ti", {4, 13}}};

  std::vector<gamma::GammaLine> lines;
  if (f.lines_path.empty()) {
    lines = gamma::lunar_regolith_lines();
  } else {
    std::ifstream in(f.lines_path);
    if (!in) throw UsageError("cannot open line list " + f.lines_path);
    std::stringstream ss;
    ss << in.rdbuf();
    lines = gamma::parse_gamma_lines(ss.str());
  }

  std::vector<std::pair<std::string, gamma::EfficiencyModel>> models;
  if (f.model == "both" || f.model == "full") models.push_back({"full", {1.0}});
  if (f.model == "both" || f.model == "reduced") models.push_back({"reduced", {f.efficiency}});

  const bool compare = f.lines_path.empty() && f.area == 1.0 && f.hours == 24.0 &&
                       f.efficiency == 0.1;
  t.meta.emplace_back("area_cm2", format_number(f.area));
  t.meta.emplace_back("hours", format_number(f.hours));
  t.columns = {{"element", ""},      {"energy", "MeV"},       {"flux", "1/(cm^2 day)"},
               {"model", ""},        {"efficiency", "1"},     {"counts", "1"},
               {"error", "%"},       {"error_rounded", "%"},  {"printed", "%"},
               {"status", ""}};
  bool all_ok = true;
  for (const auto& [model_name, model] : models) {
    for (const auto& line : lines) {
      const auto r = gamma::detection_error(line, f.area, f.hours * 3600.0, model);
      Cell err{}, rounded{}, printed_cell{};
      std::string status = "n/a";
      if (r.detectable()) {
        err = *r.error_percent;
        rounded = static_cast<double>(gamma::round_percent(*r.error_percent));
      } else {
        rounded = std::string("ND");
      }
      if (compare) {
        auto it = std::find_if(printed.begin(), printed.end(),
                               [&](const auto& p) { return p.first == line.element; });
        if (it != printed.end()) {
          const int want = model_name == "full" ? it->second.first : it->second.second;
          const double tol = line.element == "Lu" ? 2.0 : 1.0;
          bool ok;
          if (want < 0) {
            printed_cell = std::string("ND");
            ok = !r.detectable();
          } else {
            printed_cell = static_cast<double>(want);
            ok = r.detectable() && std::abs(gamma::round_percent(*r.error_percent) - want) <= tol;
          }
          all_ok = all_ok && ok;
          status = pass_fail(ok);
        }
      }
      t.add_row({line.element, line.energy, line.flux, model_name, model.efficiency(line),
                 r.counts, err, rounded, printed_cell, status});
    }
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

// --- sweep ------------------------------------------------------------------

struct SweepFlags {
  std::string x = "scale";
  std::string y;
  std::string body = "Reference";
  std::string power = "solar";
  int grid = 50;
  std::optional<double> from;
  std::optional<double> to;
  std::string spacing = "log";
  double scale = 0.01;
  std::optional<double> distance;
  double shield = 1.0;
  std::string orbiter_power = "rtg";
};

int cmd_sweep(const Context& ctx, const SweepFlags& f, Table& t) {
  const auto axis = parse_sweep_axis(f.x);
  if (!axis) throw UsageError("unknown x axis '" + f.x + "'; expected scale|distance|shield");
  const Quantity* q = find_quantity(f.y);
  if (!q) {
    std::string hint;
    for (const auto& s : suggest_quantities(f.y)) hint += (hint.empty() ? "" : ", ") + s;
    std::string all;
    for (const auto& r : quantity_registry()) all += (all.empty() ? "" : ", ") + r.name;
    throw UsageError("unknown quantity '" + f.y + "'; did you mean: " + hint +
                     "? available: " + all);
  }
  SweepSetup setup;
  setup.environment = lookup_body(ctx, f.body);
  setup.power = lookup_power(f.power);
  setup.scenario = ctx.config.scenario;
  setup.orbiter = ctx.config.orbiter;
  const auto op = parse_orbiter_power(f.orbiter_power);
  if (!op) throw UsageError("orbiter power must be solar|rtg");
  setup.orbiter_power = *op;

  double lo = 1e-3, hi = 1.0;
  if (*axis == SweepAxis::distance) lo = 1.0, hi = 500.0;
  if (*axis == SweepAxis::shield) lo = 0.1, hi = 10.0;
  lo = f.from.value_or(lo);
  hi = f.to.value_or(hi);
  const AxisScale spacing = f.spacing == "linear" ? AxisScale::linear : AxisScale::log;
  Eigen::ArrayXd grid;
  try {
    grid = make_grid(lo, hi, f.grid, spacing);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  SweepPoint base;
  base.scale = f.scale;
  base.distance = f.distance;
  base.shield = f.shield;
  const auto rows = sweep(setup, *axis, *q, grid, base);

  t.meta.emplace_back("body", setup.environment.name);
  t.meta.emplace_back("power", std::string(to_string(setup.power)));
  t.meta.emplace_back("quantity", q->description);
  t.columns = {{std::string(to_string(*axis)), std::string(unit_of(*axis))},
               {q->name, q->unit},
               {"error", ""}};
  for (const auto& r : rows) {
    t.add_row({r.x, r.y ? Cell{*r.y} : Cell{}, r.error});
  }
  return kExitOk;
}

// --- feasibility ------------------------------------------------------------

struct FeasibilityFlags {
  std::string body;
  std::string power = "rtg_current";
  std::vector<std::string> instruments{"imaging"};
};

int cmd_feasibility(const Context& ctx, const FeasibilityFlags& f, Table& t) {
  const Environment& env = lookup_body(ctx, f.body);
  const PowerKind power = lookup_power(f.power);
  std::vector<Instrument> instruments;
  for (const auto& name : f.instruments) {
    if (name == "none" || name.empty()) continue;
    auto i = parse_instrument(name);
    if (!i) {
      std::string all;
      for (Instrument k : all_instruments()) all += (all.empty() ? "" : ", ") + std::string(to_string(k));
      throw UsageError("unknown instrument '" + name + "'; expected one of: " + all);
    }
    if (std::find(instruments.begin(), instruments.end(), *i) == instruments.end()) {
      instruments.push_back(*i);
    }
  }
  const FeasibilityReport rep = feasibility_report(env, power, instruments, ctx.config.scenario);

  t.meta.emplace_back("body", rep.body);
  t.meta.emplace_back("power", std::string(to_string(rep.power)));
  std::string inst;
  for (Instrument i : rep.instruments) inst += (inst.empty() ? "" : ",") + std::string(to_string(i));
  t.meta.emplace_back("instruments", inst.empty() ? "none" : inst);
  t.meta.emplace_back("overall_min_m", format_number(rep.overall_min));
  t.meta.emplace_back("overall_max_m", format_number(rep.overall_max));
  t.meta.emplace_back("binding", rep.binding);
  t.meta.emplace_back("category",
                      rep.category ? std::string(to_string(*rep.category)) : "infeasible");
  if (rep.shield_requirement) {
    t.meta.emplace_back("shield_requirement_g_cm2", format_number(*rep.shield_requirement));
  }
  for (size_t i = 0; i < rep.warnings.size(); ++i) {
    t.meta.emplace_back("warning_" + std::to_string(i + 1), rep.warnings[i]);
  }

  t.columns = {{"constraint", ""}, {"kind", ""},   {"min_scale", "m"}, {"max_scale", "m"},
               {"binding", ""},    {"status", ""}, {"note", ""}};
  for (const auto& r : rep.constraints) {
    t.add_row({r.name, std::string(to_string(r.kind)),
               r.min_scale ? Cell{*r.min_scale} : Cell{}, r.max_scale ? Cell{*r.max_scale} : Cell{},
               r.name == rep.binding, std::string(r.feasible() ? "ok" : "INFEASIBLE"), r.note});
  }
  t.add_row({std::string("overall"), std::string("summary"),
             std::isfinite(rep.overall_min) ? Cell{rep.overall_min} : Cell{},
             std::isfinite(rep.overall_max) ? Cell{rep.overall_max} : Cell{}, false,
             rep.category ? std::string(to_string(*rep.category)) : std::string("INFEASIBLE"),
             std::string("binding: ") + rep.binding});
  return kExitOk;
}

// --- campaign ---------------------------------------------------------------

int cmd_campaign(const Context& ctx, const std::string& path, Table& t) {
  Campaign campaign;
  if (path.empty()) {
    campaign = builtin_campaign();
    t.meta.emplace_back("campaign", "builtin");
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open campaign " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    campaign = parse_campaign(ss.str(), ctx.catalog);
    t.meta.emplace_back("campaign", path);
  }
  campaign.orbiter = ctx.config.orbiter;
  const CampaignMass m = campaign_mass(campaign, ctx.config.scenario.constants);
  t.meta.emplace_back("delta_v_m_s", format_number(campaign.delta_v));
  t.meta.emplace_back("isp_s", format_number(campaign.isp));
  t.meta.emplace_back("mass_ratio", format_number(m.mass_ratio));
  t.columns = {{"target", ""},        {"orbiter_power", ""}, {"orbiter", "kg"},
               {"stacks", "kg"},      {"delivered", "kg"},   {"leo", "kg"}};
  double orbiters = 0, stacks = 0, delivered = 0;
  for (const auto& tm : m.targets) {
    t.add_row({tm.name, std::string(to_string(tm.orbiter_power)), tm.orbiter, tm.stacks,
               tm.delivered, tm.leo});
    orbiters += tm.orbiter;
    stacks += tm.stacks;
    delivered += tm.delivered;
  }
  t.add_row({std::string("total"), std::string(""), orbiters, stacks, delivered, m.total_leo});
  return kExitOk;
}

// --- bodies -----------------------------------------------------------------

int cmd_bodies(const Context& ctx, Table& t) {
  t.columns = {{"name", ""},
               {"solar_distance", "AU"},
               {"surface_temp", "K"},
               {"gravity", "m/s^2"},
               {"atmosphere_rel_density", "1"},
               {"link_background_temp", "K"},
               {"radiation_regime", ""},
               {"orbiter_range", "m"}};
  for (const auto& e : ctx.catalog) {
    t.add_row({e.name, e.solar_distance, e.surface_temp, e.gravity, e.atmosphere_rel_density,
               e.link_background_temp, std::string(to_string(e.radiation_regime)),
               e.orbiter_range});
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_path, "JSON config (default: $MICROROVER_CONFIG)");
  sub->add_option("--catalog", c.catalog_path, "JSON environment catalog replacing the builtin one");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write output to a file instead of stdout");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scaling and feasibility engine for miniature planetary rovers", "microrover"};
  app.set_version_flag("--version", std::string("microrover ") + kVersion);
  app.require_subcommand(1);

  Common common;
  Table2Flags t2;
  GammaFlags gf;
  SweepFlags sf;
  FeasibilityFlags ff;
  std::string campaign_path;

  auto* table2 = app.add_subcommand("table2", "Link budget for a 1 cm rover at 1e4 km");
  add_common(table2, common);
  table2->add_option("--range", t2.range, "Rover-orbiter range (m)")->check(CLI::PositiveNumber)->capture_default_str();
  table2->add_option("--wavelength", t2.wavelength, "Wavelength (m)")->check(CLI::PositiveNumber)->capture_default_str();
  table2->add_option("--rf-power", t2.rf_power, "Radiated power (W)")->check(CLI::PositiveNumber)->capture_default_str();
  table2->add_option("--temperature", t2.temperature, "Receiver antenna temperature (K)")->check(CLI::PositiveNumber)->capture_default_str();
  table2->add_option("--tx-diameter", t2.tx_diameter, "Rover dish (m)")->check(CLI::PositiveNumber)->capture_default_str();
  table2->add_option("--rx-diameter", t2.rx_diameter, "Orbiter dish (m)")->check(CLI::PositiveNumber)->capture_default_str();
  table2->add_option("--antenna-efficiency", t2.efficiency, "Aperture efficiency")->check(CLI::Range(1e-9, 1.0))->capture_default_str();
  table2->add_option("--electrical-efficiency", t2.electrical_efficiency, "RF / electrical")->check(CLI::Range(1e-9, 1.0))->capture_default_str();
  table2->add_option("--snr", t2.snr, "Required E_b/N0")->check(CLI::PositiveNumber)->capture_default_str();

  auto* table4 = app.add_subcommand("table4", "Minimum high-Z absorber thickness by gamma energy");
  add_common(table4, common);

  auto* gamma_cmd = app.add_subcommand("gamma", "Counting errors for a gamma line list");
  add_common(gamma_cmd, common);
  gamma_cmd->add_option("--area", gf.area, "Detector face (cm^2)")->check(CLI::PositiveNumber)->capture_default_str();
  gamma_cmd->add_option("--hours", gf.hours, "Integration time (h)")->check(CLI::PositiveNumber)->capture_default_str();
  gamma_cmd->add_option("--efficiency-model", gf.model, "full|reduced|both")->check(CLI::IsMember({"full", "reduced", "both"}))->capture_default_str();
  gamma_cmd->add_option("--efficiency", gf.efficiency, "High-energy efficiency of the reduced model")->check(CLI::Range(1e-9, 1.0))->capture_default_str();
  gamma_cmd->add_option("--lines", gf.lines_path, "JSON line list replacing the lunar regolith one");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate one quantity over a grid");
  add_common(sweep_cmd, common);
  sweep_cmd->add_option("--x", sf.x, "scale|distance|shield")->capture_default_str();
  sweep_cmd->add_option("--y", sf.y, "Quantity name")->required();
  sweep_cmd->add_option("--body", sf.body, "Catalog body")->capture_default_str();
  sweep_cmd->add_option("--power", sf.power, "Power source")->capture_default_str();
  sweep_cmd->add_option("--grid", sf.grid, "Number of points")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--from", sf.from, "Grid start (x units)");
  sweep_cmd->add_option("--to", sf.to, "Grid end (x units)");
  sweep_cmd->add_option("--spacing", sf.spacing, "log|linear")->check(CLI::IsMember({"log", "linear"}))->capture_default_str();
  sweep_cmd->add_option("--scale", sf.scale, "Rover edge when not swept (m)")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--distance", sf.distance, "Solar/Earth distance when not swept (AU)")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--shield", sf.shield, "Shielding when not swept (g/cm^2)")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--orbiter-power", sf.orbiter_power, "solar|rtg")->capture_default_str();
  bool list_quantities = false;
  sweep_cmd->add_flag("--list", list_quantities, "List quantities and exit");

  auto* feas = app.add_subcommand("feasibility", "Minimum feasible scale per constraint");
  add_common(feas, common);
  feas->add_option("--body", ff.body, "Catalog body")->required();
  feas->add_option("--power", ff.power, "Power source")->capture_default_str();
  feas->add_option("--instruments", ff.instruments, "Comma-separated instruments, or none")
      ->delimiter(',')
      ->capture_default_str();

  auto* camp = app.add_subcommand("campaign", "LEO mass for a multi-target campaign");
  add_common(camp, common);
  camp->add_option("campaign", campaign_path, "Campaign JSON (default: builtin campaign)");

  auto* bodies = app.add_subcommand("bodies", "List the environment catalog");
  add_common(bodies, common);

  auto* config_cmd = app.add_subcommand("config", "Print the effective config as JSON");
  add_common(config_cmd, common);

  // --list needs no quantity.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (std::find(args.begin(), args.end(), "--list") != args.end()) {
    sweep_cmd->get_option("--y")->required(false);
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Context ctx = make_context(common);
    if (config_cmd->parsed()) {
      out << serialize_config(ctx.config);
      return kExitOk;
    }
    if (sweep_cmd->parsed() && list_quantities) {
      Table t = new_table(ctx, "sweep");
      t.columns = {{"name", ""}, {"unit", ""}, {"description", ""}};
      for (const auto& q : quantity_registry()) t.add_row({q.name, q.unit, q.description});
      write_table(out, t, ctx.format);
      return kExitOk;
    }

    const CLI::App* sub = app.get_subcommands().front();
    Table t = new_table(ctx, sub->get_name());
    int code = kExitOk;
    if (sub == table2) code = cmd_table2(ctx, t2, t);
    else if (sub == table4) code = cmd_table4(ctx, t);
    else if (sub == gamma_cmd) code = cmd_gamma(ctx, gf, t);
    else if (sub == sweep_cmd) code = cmd_sweep(ctx, sf, t);
    else if (sub == feas) code = cmd_feasibility(ctx, ff, t);
    else if (sub == camp) code = cmd_campaign(ctx, campaign_path, t);
    else if (sub == bodies) code = cmd_bodies(ctx, t);

    if (common.out_path.empty()) {
      write_table(out, t, ctx.format);
    } else {
      std::ofstream file(common.out_path);
      if (!file) throw UsageError("cannot write " + common.out_path);
      write_table(file, t, ctx.format);
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

} // namespace microrover
