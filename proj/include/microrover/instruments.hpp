#pragma once

#include <optional>
#include <string_view>

#include "microrover/units.hpp"

namespace microrover {

struct OpticalSystem {
  double pixels_across = 250.0;
  double wavelength = 0.55e-6;  // m
  double field_of_view = 90.0;  // degrees
};

void validate(const OpticalSystem& s);

// Rayleigh criterion per pixel: D = 1.22 lambda / (fov / pixels).
template <typename Scalar>
Scalar diffraction_aperture(const Scalar& wavelength, double pixels_across, double fov_rad) {
  return Scalar(1.22) * wavelength * pixels_across / fov_rad;
}

double min_aperture(const OpticalSystem& sys);

enum class SpectrometerKind { simple, raman };

// Grating spectrometer: 8 lambda per channel along the dispersion axis.
double spectrometer_min_size(double wavelength, double channels, SpectrometerKind kind);

enum class InstrumentKind { apx, raman, qcl_ir, ir_spectrometer, abrasion };
std::string_view to_string(InstrumentKind k);
std::optional<InstrumentKind> parse_instrument_kind(std::string_view s);

struct InstrumentModel {
  InstrumentKind kind = InstrumentKind::apx;
  double reference_time = 0.0;       // s, APX only
  double reference_scale = 0.0;      // m, APX only
  double scaling_exponent = 0.0;     // APX only
  double energy_per_analysis = 0.0;  // J electrical
  double min_power = 0.0;            // W; below this the source needs a store
  double pulse_energy = 0.0;         // J held in storage when below min_power

  static InstrumentModel apx();
  static InstrumentModel raman();
  static InstrumentModel qcl_ir();
  static InstrumentModel ir_spectrometer();
  static InstrumentModel abrasion(double volume_mm3 = 50.0);
  static InstrumentModel of(InstrumentKind k);

  bool energy_limited() const { return kind != InstrumentKind::apx && energy_per_analysis > 0.0; }
  // Steady power for one analysis per hour.
  double hourly_power() const { return energy_limited() ? energy_per_analysis / units::hour : 0.0; }
};

inline constexpr double kAbrasionEnergyPerVolume = 0.1e9; // J/m^3 (0.1 J/mm^3)
inline constexpr double kCapacitorSpecificEnergy = 360.0; // J/kg
inline constexpr double kMinPulseCapacitorMass = 1e-6;    // kg

// Whether a capacitor of `capacitor_mass` covers the model's pulse energy.
bool pulse_storage_ok(const InstrumentModel& m, double capacitor_mass);

struct AnalysisTime {
  std::optional<double> seconds; // empty when infeasible
  bool uses_storage = false;

  bool feasible() const { return seconds.has_value(); }
};

// APX: t_ref (L/L_ref)^n, independent of power. Energy-limited kinds: E/P;
// below min_power the source runs from storage if `capacitor_mass` holds the
// pulse energy, and is infeasible otherwise.
AnalysisTime analysis_time(const InstrumentModel& m, double scale, double available_power,
                           double capacitor_mass = 0.0);

struct StarTrackerBudget {
  double signal = 0.0; // photons/s
  double snr = 0.0;    // over one second
};

StarTrackerBudget star_tracker_budget(double aperture_side, double target_flux_per_um2,
                                      double background_per_star);

struct GuidanceBudget {
  double operations = 0.0;
  double memory_bits = 0.0;
};

GuidanceBudget landing_guidance_budget(double pixels, double ops_per_pixel, double images);

} // namespace microrover
