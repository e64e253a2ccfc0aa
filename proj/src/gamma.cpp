#include "microrover/gamma.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "microrover/errors.hpp"

namespace microrover::gamma {

DetectorMaterial DetectorMaterial::hgi2() { return {"HgI2", 6.4, 2.1, "mature room-temperature semiconductor"}; }
DetectorMaterial DetectorMaterial::pbo() { return {"PbO", 9.7, 1.9, "best figure of merit of the oxides"}; }
DetectorMaterial DetectorMaterial::tl6sei4() { return {"Tl6SeI4", 7.4, 1.9, ""}; }
DetectorMaterial DetectorMaterial::ge() { return {"Ge", 5.3, 0.67, "cooled reference"}; }
DetectorMaterial DetectorMaterial::cdznte() { return {"CdZnTe", 5.8, 1.6, ""}; }

const std::vector<DetectorMaterial>& detector_materials() {
  static const std::vector<DetectorMaterial> all = {
      DetectorMaterial::hgi2(), DetectorMaterial::pbo(), DetectorMaterial::tl6sei4(),
      DetectorMaterial::ge(), DetectorMaterial::cdznte()};
  return all;
}

std::string_view to_string(Mechanism m) {
  return m == Mechanism::photoelectric ? "photoelectric" : "pair";
}

namespace {

KnotTable column(const std::vector<AttenuationRow>& rows, bool pair) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (!pair) {
      pts.emplace_back(r.energy, r.photoelectric);
    } else if (r.pair) {
      pts.emplace_back(r.energy, *r.pair);
    }
  }
  if (pts.empty()) throw std::invalid_argument("attenuation column is empty");
  Eigen::ArrayXd x(static_cast<Eigen::Index>(pts.size()));
  Eigen::ArrayXd y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    x(i) = pts[static_cast<size_t>(i)].first;
    y(i) = pts[static_cast<size_t>(i)].second;
  }
  return KnotTable(std::move(x), std::move(y), AxisScale::log, AxisScale::log);
}

} // namespace

AttenuationTable::AttenuationTable(std::vector<AttenuationRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("attenuation table is empty");
  for (size_t i = 1; i < rows_.size(); ++i) {
    if (!(rows_[i].energy > rows_[i - 1].energy)) {
      throw std::invalid_argument("attenuation energies must be strictly increasing");
    }
    if (rows_[i].photoelectric < rows_[i - 1].photoelectric) {
      throw std::invalid_argument("photoelectric thickness must be non-decreasing");
    }
  }
  photoelectric_ = column(rows_, false);
  pair_ = column(rows_, true);
}

double AttenuationTable::min_thickness(double energy, Mechanism m) const {
  if (!(energy >= min_energy() && energy <= max_energy())) {
    throw DomainError("gamma energy " + std::to_string(energy) + " MeV outside table");
  }
  if (m == Mechanism::photoelectric) return photoelectric_(energy);
  if (energy < pair_threshold()) {
    throw DomainError("pair production needs at least " + std::to_string(pair_threshold()) +
                      " MeV");
  }
  return pair_(energy);
}

double AttenuationTable::governing_thickness(double energy) const {
  double t = min_thickness(energy, Mechanism::photoelectric);
  if (energy >= pair_threshold()) t = std::min(t, min_thickness(energy, Mechanism::pair));
  return t;
}

const AttenuationTable& high_z_attenuation() {
  static const AttenuationTable table({
      {0.2, 0.2, std::nullopt},
      {0.3, 0.4, std::nullopt},
      {0.4, 0.5, std::nullopt},
      {0.5, 0.7, std::nullopt},
      {0.7, 1.0, std::nullopt},
      {0.8, 1.3, std::nullopt},
      {0.9, 1.4, std::nullopt},
      {1.1, 2.0, 2.0},
      {1.3, 2.6, 2.6},
      {1.4, 2.8, 2.8},
      {1.5, 3.0, 3.0},
      {1.7, 3.4, 0.5},
      {1.8, 3.6, 0.6},
      {1.9, 3.8, 0.7},
      {2.3, 4.6, 0.9},
      {4.5, 7.0, 3.5},
  });
  return table;
}

double thickness_cm(double areal_density, const DetectorMaterial& mat) {
  require_non_negative(areal_density, "areal_density");
  require_positive(mat.density, "density");
  return areal_density / mat.density;
}

void validate(const GammaLine& line) {
  if (line.element.empty()) throw SchemaError("element", "must be non-empty");
  if (!(line.energy > 0.0)) throw SchemaError("energy", "must be > 0");
  if (!(line.flux >= 0.0)) throw SchemaError("flux", "must be >= 0");
  if (!(line.concentration >= 0.0)) throw SchemaError("concentration", "must be >= 0");
}

const std::vector<GammaLine>& lunar_regolith_lines() {
  static const std::vector<GammaLine> lines = {
      {"K", 1.46, 1200.0, 3456.0, false},
      {"U", 0.61, 0.5, 1584.0, false},
      {"Th", 2.61, 1.9, 3168.0, true},
      {"Na", 0.44, 3500.0, 86.4, false},
      {"Lu", 0.31, 0.5, 11.0, false},
      {"Sm", 0.33, 7.0, 20.0, false},
      {"Gd", 1.19, 8.0, 20.0, true},
      {"Ni", 9.0, 400.0, 10.0, false},
      {"Fe", 0.85, 9e4, 1656.0, false},
      {"Al", 2.21, 1.1e5, 972.0, false},
      {"Ca", 3.74, 1.0e5, 504.0, false},
      {"O", 6.13, 4.35e5, 3744.0, false},
      {"Si", 1.79, 2.0e5, 4636.8, false},
      {"Ti", 6.76, 1.4e4, 593.28, false},
  };
  return lines;
}

std::vector<GammaLine> parse_gamma_lines(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
  if (!doc.is_array()) throw SchemaError("<document>", "line list must be a JSON array");
  std::vector<GammaLine> out;
  for (const auto& j : doc) {
    if (!j.is_object()) throw SchemaError("<entry>", "line entries must be objects");
    for (const auto& [key, _] : j.items()) {
      if (key != "element" && key != "energy" && key != "concentration" && key != "flux" &&
          key != "low_energy_alternative") {
        throw SchemaError(key, "unknown key");
      }
    }
    GammaLine line;
    try {
      line.element = j.at("element").get<std::string>();
      line.energy = j.at("energy").get<double>();
      line.flux = j.at("flux").get<double>();
      line.concentration = j.value("concentration", 0.0);
      line.low_energy_alternative = j.value("low_energy_alternative", false);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError("<entry>", e.what());
    }
    validate(line);
    out.push_back(std::move(line));
  }
  return out;
}

double EfficiencyModel::efficiency(const GammaLine& line) const {
  if (line.energy < low_energy_cutoff || line.low_energy_alternative) return 1.0;
  return high_energy_efficiency;
}

DetectionResult detection_error(const GammaLine& line, double area_cm2, double duration_s,
                                const EfficiencyModel& model) {
  validate(line);
  require_positive(area_cm2, "area");
  require_positive(duration_s, "duration");
  DetectionResult r;
  r.counts = line.flux * area_cm2 * (duration_s / 86400.0) * model.efficiency(line);
  if (r.counts >= kMinDetectableCounts) r.error_percent = 100.0 / std::sqrt(r.counts);
  return r;
}

long round_percent(double percent) { return std::lround(percent); }

double spectroscopic_efficiency(const DetectorMaterial& mat, double thickness_cm, double energy,
                                const AttenuationTable& table) {
  require_positive(mat.density, "density");
  require_non_negative(thickness_cm, "thickness");
  const double t = table.governing_thickness(energy);
  return std::min(1.0, -std::expm1(-mat.density * thickness_cm / t));
}

double band_efficiency(const DetectorMaterial& mat, double thickness_cm, double lo, double hi,
                       const AttenuationTable& table) {
  if (!(hi > lo)) throw std::invalid_argument("band needs hi > lo");
  constexpr int n = 101;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = lo + (hi - lo) * i / (n - 1);
    sum += spectroscopic_efficiency(mat, thickness_cm, e, table);
  }
  return sum / n;
}

DetectorSizing detector_mass_for_efficiency(const DetectorMaterial& mat, double target_eff,
                                            double band_lo, double band_hi,
                                            const AttenuationTable& table) {
  if (!(target_eff >= 0.0 && target_eff < 1.0)) {
    throw std::invalid_argument("target efficiency must be in [0, 1)");
  }
  if (target_eff == 0.0) return {};
  constexpr double ref_area_cm2 = 1.0;
  auto relative = [&](double edge_m) {
    const double a_cm = edge_m * 100.0;
    return band_efficiency(mat, a_cm, band_lo, band_hi, table) * a_cm * a_cm / ref_area_cm2;
  };
  const double lo = 1e-6, hi = 1.0;
  if (relative(hi) < target_eff) throw DomainError("target efficiency unreachable");
  const double edge =
      bisect_boundary_log([&](double a) { return relative(a) >= target_eff; }, lo, hi, 1e-9);
  DetectorSizing s;
  s.edge = edge;
  s.mass = mat.density * std::pow(edge * 100.0, 3) * 1e-3;
  s.efficiency = band_efficiency(mat, edge * 100.0, band_lo, band_hi, table);
  return s;
}

} // namespace microrover::gamma
