#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "microrover/commlink.hpp"
#include "microrover/design.hpp"
#include "microrover/environments.hpp"
#include "microrover/instruments.hpp"
#include "microrover/locomotion.hpp"
#include "microrover/mission.hpp"
#include "microrover/power.hpp"
#include "microrover/radiation.hpp"
#include "microrover/thermal.hpp"

namespace microrover {

enum class ScaleCategory { sub_mm, mm_1_to_10, cm_10_to_100, over_100mm };
std::string_view to_string(ScaleCategory c);

// Closed-open: [0, 1 mm), [1, 10 mm), [10, 100 mm), [100 mm, inf).
ScaleCategory classify_scale(double scale);

// Everything besides the body and power source that the solver needs.
struct Scenario {
  RoverDesign design;
  LinkConfig link;
  LocomotionModel locomotion;
  DataRequirement data;
  HighTempComputeModel hot_compute;
  double mission_days = 1000.0;
  double dose_limit = kDefaultDoseLimit;
  double dose_margin = kDefaultDoseMargin;
  double store_rate = 100.0; // bit/s drawn from energy stores in lifetime curves
  Constants constants;
};

enum class Instrument {
  imaging,
  uv_imaging,
  ir_imaging,
  apx,
  ir_spectroscopy,
  thermal_ir_spectroscopy,
  raman,
  qcl,
  gamma_minimal,
  gamma_efficient,
  abrasion,
  libs,
  mass_spectrometry
};

std::string_view to_string(Instrument i);
std::optional<Instrument> parse_instrument(std::string_view s);
const std::vector<Instrument>& all_instruments();

// Table floor backing the instrument and, for powered instruments, the model
// whose hourly energy is added to the load.
std::string_view floor_name(Instrument i);
std::optional<InstrumentModel> powered_model(Instrument i);

enum class ConstraintKind { hard_floor, power_feasibility, temp_gate };
std::string_view to_string(ConstraintKind k);

// Compute load at the body: the silicon model, or the high-temperature model
// (independent of scale) above the silicon limit.
double body_compute_load(const Environment& env, const Scenario& s, double scale);

struct Constraint {
  std::string name;
  ConstraintKind kind = ConstraintKind::hard_floor;
  double floor = 0.0;                   // hard floors
  std::function<double(double)> margin; // power: generated - load at scale L (W)
  std::string reason;                   // set when the constraint can never pass
};

std::vector<Constraint> build_constraints(const Environment& env, PowerKind power,
                                          const std::vector<Instrument>& instruments,
                                          const Scenario& s = {});

inline constexpr double kSearchMin = 1e-4; // m
inline constexpr double kSearchMax = 1.0;  // m
inline constexpr Eigen::Index kSearchGrid = 200;
inline constexpr double kSearchRelTol = 1e-3;

struct ConstraintResult {
  std::string name;
  ConstraintKind kind = ConstraintKind::hard_floor;
  std::optional<double> min_scale; // empty when infeasible
  std::optional<double> max_scale; // set when feasibility ends inside the search range
  bool at_search_floor = false;    // feasible already at kSearchMin
  double margin_at_min = 0.0;      // predicate values at the search bounds
  double margin_at_max = 0.0;
  std::string note;

  bool feasible() const { return min_scale.has_value(); }
};

ConstraintResult min_feasible_scale(const Constraint& c);

struct FeasibilityReport {
  std::string body;
  PowerKind power = PowerKind::solar;
  std::vector<Instrument> instruments;
  std::vector<ConstraintResult> constraints;
  double overall_min = 0.0; // +inf when some constraint is infeasible
  double overall_max = 0.0; // +inf when nothing caps the scale
  std::string binding;
  std::optional<ScaleCategory> category;
  std::optional<double> shield_requirement; // g/cm^2 water equivalent
  std::vector<std::string> warnings;

  bool feasible() const { return category.has_value(); }
};

FeasibilityReport feasibility_report(const Environment& env, PowerKind power,
                                     const std::vector<Instrument>& instruments,
                                     const Scenario& s = {});

// Least-squares log-log slope of the achievable data rate against scale,
// with the whole power budget routed to the transmitter.
double measured_data_rate_exponent(const Environment& env, PowerKind power, double lo, double hi,
                                   const Scenario& s = {}, Eigen::Index n = 41);

// -------------------------------------------------------------------------
// Sweeps

enum class SweepAxis { scale, distance, shield };
std::string_view to_string(SweepAxis a);
std::optional<SweepAxis> parse_sweep_axis(std::string_view s);
std::string_view unit_of(SweepAxis a);

struct SweepPoint {
  double scale = 0.01;    // m
  std::optional<double> distance; // AU; the body's own distance when unset
  double shield = 1.0;    // g/cm^2 water equivalent
};

struct SweepSetup {
  Environment environment;
  PowerKind power = PowerKind::solar;
  Scenario scenario;
  OrbiterModel orbiter;
  OrbiterPower orbiter_power = OrbiterPower::rtg;
};

struct Quantity {
  std::string name;
  std::string unit;
  std::string description;
  std::function<double(const SweepSetup&, const SweepPoint&)> eval;
};

const std::vector<Quantity>& quantity_registry();
const Quantity* find_quantity(std::string_view name);
// Registry names closest to `name`, for error messages.
std::vector<std::string> suggest_quantities(std::string_view name, size_t max = 3);

struct SweepRow {
  double x = 0.0;
  std::optional<double> y;
  std::string error; // evaluation error, the sweep continues past it
};

std::vector<SweepRow> sweep(const SweepSetup& setup, SweepAxis x, const Quantity& y,
                            const Eigen::ArrayXd& grid, SweepPoint base = {});

} // namespace microrover
