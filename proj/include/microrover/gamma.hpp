#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "microrover/interpolation.hpp"

namespace microrover::gamma {

struct DetectorMaterial {
  std::string name;
  double density = 0.0; // g/cm^3
  double band_gap = 0.0; // eV, 0 when not quoted
  std::string notes;

  static DetectorMaterial hgi2();
  static DetectorMaterial pbo();
  static DetectorMaterial tl6sei4();
  static DetectorMaterial ge();
  static DetectorMaterial cdznte();
};

const std::vector<DetectorMaterial>& detector_materials();

enum class Mechanism { photoelectric, pair };
std::string_view to_string(Mechanism m);

struct AttenuationRow {
  double energy = 0.0;                // MeV
  double photoelectric = 0.0;         // g/cm^2
  std::optional<double> pair;         // g/cm^2, present from the pair threshold up
};

// Minimum absorber thickness for a photon of a given energy to deposit its
// energy in a high-Z detector, per interaction mechanism.
class AttenuationTable {
public:
  explicit AttenuationTable(std::vector<AttenuationRow> rows);

  const std::vector<AttenuationRow>& rows() const { return rows_; }
  double min_energy() const { return rows_.front().energy; }
  double max_energy() const { return rows_.back().energy; }
  double pair_threshold() const { return pair_.front(); }

  // Log-log interpolation, exact at rows. Throws DomainError outside the
  // table or for pair production below its threshold.
  double min_thickness(double energy, Mechanism m) const;

  // Smallest thickness over the mechanisms active at `energy`.
  double governing_thickness(double energy) const;

private:
  std::vector<AttenuationRow> rows_;
  KnotTable photoelectric_;
  KnotTable pair_;
};

const AttenuationTable& high_z_attenuation();

inline double min_thickness(const AttenuationTable& t, double energy, Mechanism m) {
  return t.min_thickness(energy, m);
}

// g/cm^2 -> cm
double thickness_cm(double areal_density, const DetectorMaterial& mat);

struct GammaLine {
  std::string element;
  double energy = 0.0;        // MeV
  double concentration = 0.0; // ppm
  double flux = 0.0;          // counts cm^-2 day^-1
  bool low_energy_alternative = false;
};

void validate(const GammaLine& line);

// Lunar regolith line list: 14 elements, 24 h, 1 cm^2 reference detector.
const std::vector<GammaLine>& lunar_regolith_lines();

std::vector<GammaLine> parse_gamma_lines(std::string_view json_text);

// Lines under this energy, or flagged with a low-energy alternative, see a
// full-efficiency detector even in the reduced-efficiency model.
inline constexpr double kLowEnergyCutoff = 0.8; // MeV
inline constexpr double kMinDetectableCounts = 4.0;

struct EfficiencyModel {
  double high_energy_efficiency = 1.0;
  double low_energy_cutoff = kLowEnergyCutoff;

  double efficiency(const GammaLine& line) const;
};

struct DetectionResult {
  double counts = 0.0;
  std::optional<double> error_percent; // empty when not detectable

  bool detectable() const { return error_percent.has_value(); }
};

DetectionResult detection_error(const GammaLine& line, double area_cm2, double duration_s,
                                const EfficiencyModel& model);

// Half away from zero, as printed tables do.
long round_percent(double percent);

double spectroscopic_efficiency(const DetectorMaterial& mat, double thickness_cm, double energy,
                                const AttenuationTable& table = high_z_attenuation());

// Mean efficiency over [lo, hi] MeV sampled uniformly.
double band_efficiency(const DetectorMaterial& mat, double thickness_cm, double lo = 1.0,
                       double hi = 2.0, const AttenuationTable& table = high_z_attenuation());

struct DetectorSizing {
  double edge = 0.0; // m
  double mass = 0.0; // kg
  double efficiency = 0.0; // band efficiency at that edge
};

// Smallest cube whose band efficiency times face area matches target_eff of
// a 1 cm^2 full-efficiency reference detector.
DetectorSizing detector_mass_for_efficiency(const DetectorMaterial& mat, double target_eff,
                                            double band_lo = 1.0, double band_hi = 2.0,
                                            const AttenuationTable& table = high_z_attenuation());

} // namespace microrover::gamma
