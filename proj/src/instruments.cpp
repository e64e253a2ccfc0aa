#include "microrover/instruments.hpp"

#include <cmath>
#include <stdexcept>

#include "microrover/errors.hpp"

namespace microrover {

void validate(const OpticalSystem& s) {
  if (!(s.pixels_across >= 1.0)) throw std::invalid_argument("pixels_across must be >= 1");
  require_positive(s.wavelength, "wavelength");
  if (!(s.field_of_view > 0.0 && s.field_of_view <= 180.0)) {
    throw std::invalid_argument("field_of_view must be in (0, 180] degrees");
  }
}

double min_aperture(const OpticalSystem& sys) {
  validate(sys);
  return diffraction_aperture(sys.wavelength, sys.pixels_across,
                              units::deg2rad(sys.field_of_view));
}

double spectrometer_min_size(double wavelength, double channels, SpectrometerKind kind) {
  require_positive(wavelength, "wavelength");
  if (!(channels >= 1.0)) throw std::invalid_argument("channels must be >= 1");
  const double simple = 8.0 * channels * wavelength;
  return kind == SpectrometerKind::raman ? 10.0 * simple : simple;
}

std::string_view to_string(InstrumentKind k) {
  switch (k) {
    case InstrumentKind::apx: return "apx";
    case InstrumentKind::raman: return "raman";
    case InstrumentKind::qcl_ir: return "qcl_ir";
    case InstrumentKind::ir_spectrometer: return "ir_spectrometer";
    case InstrumentKind::abrasion: return "abrasion";
  }
  return "apx";
}

std::optional<InstrumentKind> parse_instrument_kind(std::string_view s) {
  for (auto k : {InstrumentKind::apx, InstrumentKind::raman, InstrumentKind::qcl_ir,
                 InstrumentKind::ir_spectrometer, InstrumentKind::abrasion}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

InstrumentModel InstrumentModel::apx() {
  InstrumentModel m;
  m.kind = InstrumentKind::apx;
  m.reference_time = 900.0;
  m.reference_scale = 0.020;
  m.scaling_exponent = 2.0;
  return m;
}

InstrumentModel InstrumentModel::raman() {
  // 0.1 J optical at 10 % laser efficiency, rounded to 0.3 mW for an hour.
  // Diode lasers need ~1 mW to lase; a capacitor supplies 1 mJ bursts.
  InstrumentModel m;
  m.kind = InstrumentKind::raman;
  m.energy_per_analysis = 0.3e-3 * units::hour;
  m.min_power = 1e-3;
  m.pulse_energy = 1e-3;
  return m;
}

InstrumentModel InstrumentModel::qcl_ir() {
  // 100 pulsed lasers at 4 mW, 10 uW average over an hour; 0.4 mJ per pulse
  // train.
  InstrumentModel m;
  m.kind = InstrumentKind::qcl_ir;
  m.energy_per_analysis = 10e-6 * units::hour;
  m.min_power = 4e-3;
  m.pulse_energy = 0.4e-3;
  return m;
}

InstrumentModel InstrumentModel::ir_spectrometer() {
  // Passive grating spectrometer; detector power is inside the compute budget.
  InstrumentModel m;
  m.kind = InstrumentKind::ir_spectrometer;
  return m;
}

InstrumentModel InstrumentModel::abrasion(double volume_mm3) {
  require_positive(volume_mm3, "volume");
  InstrumentModel m;
  m.kind = InstrumentKind::abrasion;
  m.energy_per_analysis = kAbrasionEnergyPerVolume * volume_mm3 * 1e-9;
  return m;
}

InstrumentModel InstrumentModel::of(InstrumentKind k) {
  switch (k) {
    case InstrumentKind::apx: return apx();
    case InstrumentKind::raman: return raman();
    case InstrumentKind::qcl_ir: return qcl_ir();
    case InstrumentKind::ir_spectrometer: return ir_spectrometer();
    case InstrumentKind::abrasion: return abrasion();
  }
  return apx();
}

bool pulse_storage_ok(const InstrumentModel& m, double capacitor_mass) {
  require_non_negative(capacitor_mass, "capacitor_mass");
  if (m.pulse_energy <= 0.0) return true;
  return capacitor_mass * kCapacitorSpecificEnergy >= m.pulse_energy;
}

AnalysisTime analysis_time(const InstrumentModel& m, double scale, double available_power,
                           double capacitor_mass) {
  require_positive(scale, "scale");
  AnalysisTime t;
  if (m.kind == InstrumentKind::apx) {
    t.seconds = m.reference_time * std::pow(scale / m.reference_scale, m.scaling_exponent);
    return t;
  }
  if (m.energy_per_analysis <= 0.0) {
    t.seconds = 0.0;
    return t;
  }
  require_positive(available_power, "available_power");
  if (available_power < m.min_power) {
    if (!pulse_storage_ok(m, capacitor_mass)) return t;
    t.uses_storage = true;
  }
  t.seconds = m.energy_per_analysis / available_power;
  return t;
}

StarTrackerBudget star_tracker_budget(double aperture_side, double target_flux_per_um2,
                                      double background_per_star) {
  require_positive(aperture_side, "aperture_side");
  require_non_negative(target_flux_per_um2, "target_flux");
  require_non_negative(background_per_star, "background");
  const double side_um = aperture_side / units::um;
  StarTrackerBudget b;
  b.signal = target_flux_per_um2 * side_um * side_um;
  const double total = b.signal + background_per_star;
  b.snr = total > 0.0 ? b.signal / std::sqrt(total) : 0.0;
  return b;
}

GuidanceBudget landing_guidance_budget(double pixels, double ops_per_pixel, double images) {
  require_non_negative(pixels, "pixels");
  require_non_negative(ops_per_pixel, "ops_per_pixel");
  require_non_negative(images, "images");
  return {pixels * ops_per_pixel * images, 3.0 * pixels};
}

} // namespace microrover
