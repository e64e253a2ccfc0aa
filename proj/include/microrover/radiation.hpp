#pragma once

#include <optional>
#include <string_view>

#include "microrover/environments.hpp"
#include "microrover/interpolation.hpp"

namespace microrover {

enum class ShieldMaterial { water_equiv, high_z };
std::string_view to_string(ShieldMaterial m);

// Trapped-electron dose behind shielding, Gy per 30 days against areal
// density in g/cm^2 water equivalent.
struct DoseCurve {
  RadiationRegime regime = RadiationRegime::jovian_europa;
  KnotTable knots;
  double io_multiplier = 10.0;
  double high_z_equivalence = 10.0;

  static DoseCurve europa();
  static DoseCurve io();
  static std::optional<DoseCurve> for_regime(RadiationRegime r);

  double min_shield(ShieldMaterial m) const;
  double max_shield(ShieldMaterial m) const;
};

inline constexpr double kDoseKnotPeriodDays = 30.0;
inline constexpr double kDefaultDoseLimit = 1e6;   // Gy
inline constexpr double kDefaultDoseMargin = 3.0;  // design factor on mission length
inline constexpr double kPvDoseLimit = 1e6;        // Gy for 50 % PV output loss

double water_equivalent(const DoseCurve& curve, double shield, ShieldMaterial m);

// Gy/day. Throws DomainError outside the knot span.
double dose_rate(const DoseCurve& curve, double shield, ShieldMaterial m);

double time_to_dose(const DoseCurve& curve, double shield, ShieldMaterial m,
                    double limit = kDefaultDoseLimit);

// kg of shield of the given areal density over `area` m^2.
double shielding_mass(double area, double shield_g_cm2);

struct ShieldRequirement {
  double shield = 0.0; // g/cm^2 water equivalent
  bool clamped = false; // lightest tabulated shield already suffices
};

// Lightest water-equivalent shield for which the dose limit outlasts
// margin x mission_days.
ShieldRequirement mission_shield_requirement(const DoseCurve& curve, double mission_days,
                                             double limit = kDefaultDoseLimit,
                                             double margin = kDefaultDoseMargin);

// Step degradation: PV loses half its output past kPvDoseLimit.
double pv_output_factor(double accumulated_dose);

} // namespace microrover
