#include "microrover/radiation.hpp"

#include "microrover/errors.hpp"
#include "microrover/units.hpp"

namespace microrover {

std::string_view to_string(ShieldMaterial m) {
  return m == ShieldMaterial::water_equiv ? "water_equiv" : "high_z";
}

DoseCurve DoseCurve::europa() {
  DoseCurve c;
  c.regime = RadiationRegime::jovian_europa;
  c.knots = KnotTable({{0.1, 2e4}, {1.0, 3e3}, {10.0, 80.0}}, AxisScale::log, AxisScale::log);
  return c;
}

DoseCurve DoseCurve::io() {
  DoseCurve c = europa();
  c.regime = RadiationRegime::jovian_io;
  return c;
}

std::optional<DoseCurve> DoseCurve::for_regime(RadiationRegime r) {
  switch (r) {
    case RadiationRegime::jovian_europa: return europa();
    case RadiationRegime::jovian_io: return io();
    case RadiationRegime::benign: break;
  }
  return std::nullopt;
}

double DoseCurve::min_shield(ShieldMaterial m) const {
  return m == ShieldMaterial::high_z ? knots.front() / high_z_equivalence : knots.front();
}

double DoseCurve::max_shield(ShieldMaterial m) const {
  return m == ShieldMaterial::high_z ? knots.back() / high_z_equivalence : knots.back();
}

double water_equivalent(const DoseCurve& curve, double shield, ShieldMaterial m) {
  return m == ShieldMaterial::high_z ? shield * curve.high_z_equivalence : shield;
}

double dose_rate(const DoseCurve& curve, double shield, ShieldMaterial m) {
  const double w = water_equivalent(curve, shield, m);
  if (!curve.knots.contains(w)) {
    throw DomainError("shielding " + std::to_string(shield) + " g/cm^2 (" +
                      std::string(to_string(m)) + ") outside dose curve");
  }
  double per_day = curve.knots(w) / kDoseKnotPeriodDays;
  if (curve.regime == RadiationRegime::jovian_io) per_day *= curve.io_multiplier;
  return per_day;
}

double time_to_dose(const DoseCurve& curve, double shield, ShieldMaterial m, double limit) {
  require_positive(limit, "limit");
  return limit / dose_rate(curve, shield, m);
}

double shielding_mass(double area, double shield_g_cm2) {
  require_non_negative(area, "area");
  require_non_negative(shield_g_cm2, "shield");
  return area * shield_g_cm2 * units::g_per_cm2;
}

ShieldRequirement mission_shield_requirement(const DoseCurve& curve, double mission_days,
                                             double limit, double margin) {
  require_positive(mission_days, "mission_days");
  require_positive(margin, "margin");
  const double needed = margin * mission_days;
  const double lo = curve.knots.front();
  const double hi = curve.knots.back();
  auto ok = [&](double s) {
    return time_to_dose(curve, s, ShieldMaterial::water_equiv, limit) >= needed;
  };
  if (ok(lo)) return {lo, true};
  if (!ok(hi)) {
    throw DomainError("no tabulated shielding survives " + std::to_string(mission_days) +
                      " days");
  }
  return {bisect_boundary_log(ok, lo, hi, 1e-6), false};
}

double pv_output_factor(double accumulated_dose) {
  require_non_negative(accumulated_dose, "accumulated_dose");
  return accumulated_dose < kPvDoseLimit ? 1.0 : 0.5;
}

} // namespace microrover
