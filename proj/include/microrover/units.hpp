#pragma once

#include <numbers>

namespace microrover {

// Everything inside the library is SI. AU, days, years, cm and g only appear
// at the boundary (catalog files, CLI flags, report columns).
struct Constants {
  double boltzmann = 1.380649e-23;          // J/K
  double stefan_boltzmann = 5.670374419e-8; // W/(m^2 K^4)
  double speed_of_light = 2.99792458e8;     // m/s
  double au = 1.495978707e11;               // m
  double seconds_per_day = 86400.0;
  double seconds_per_year = 3.15576e7;      // Julian year
  double standard_gravity = 9.80665;        // m/s^2
  // Reference PV output at 1 AU for a modern multi-junction panel. This is
  // the array output, not the solar constant.
  double solar_reference_panel_output = 400.0; // W/m^2

  bool valid() const {
    return boltzmann > 0 && stefan_boltzmann > 0 && speed_of_light > 0 && au > 0 &&
           seconds_per_day > 0 && seconds_per_year > 0 && standard_gravity > 0 &&
           solar_reference_panel_output > 0;
  }
};

inline const Constants& default_constants() {
  static const Constants c{};
  return c;
}

namespace units {

inline constexpr double pi = std::numbers::pi;

inline constexpr double cm = 1e-2;
inline constexpr double mm = 1e-3;
inline constexpr double um = 1e-6;
inline constexpr double km = 1e3;
inline constexpr double cm3 = 1e-6;  // m^3
inline constexpr double gram = 1e-3; // kg
inline constexpr double mW = 1e-3;
inline constexpr double uW = 1e-6;
inline constexpr double GHz = 1e9;
inline constexpr double day = 86400.0;
inline constexpr double hour = 3600.0;

// g/cm^2 <-> kg/m^2
inline constexpr double g_per_cm2 = 10.0;

template <typename Scalar>
constexpr Scalar deg2rad(Scalar deg) {
  return deg * Scalar(pi) / Scalar(180);
}

template <typename Scalar>
constexpr Scalar celsius_to_kelvin(Scalar c) {
  return c + Scalar(273.15);
}

} // namespace units
} // namespace microrover
