#pragma once

#include "microrover/commlink.hpp"
#include "microrover/errors.hpp"

namespace microrover {

// A cube rover of edge `scale`. The antenna fills one face and the solar panel
// area is one face.
struct RoverDesign {
  double scale = 0.01;                 // m
  double bulk_density = 800.0;         // kg/m^3
  double store_mass_fraction = 0.5;    // of total mass, for energy stores
  double power_volume_fraction = 0.5;  // of total volume, for volumetric sources
  double antenna_efficiency = 0.75;

  double volume() const { return scale * scale * scale; }
  double mass() const { return bulk_density * volume(); }
  double panel_area() const { return scale * scale; }
  double surface_area() const { return 6.0 * scale * scale; }
  double power_source_volume() const { return power_volume_fraction * volume(); }
  double store_mass() const { return store_mass_fraction * mass(); }
  Antenna antenna() const { return {scale, antenna_efficiency}; }

  RoverDesign at_scale(double L) const {
    RoverDesign d = *this;
    d.scale = L;
    return d;
  }
};

inline void validate(const RoverDesign& d) {
  require_positive(d.scale, "scale");
  require_positive(d.bulk_density, "bulk_density");
  if (!(d.store_mass_fraction > 0.0 && d.store_mass_fraction < 1.0)) {
    throw std::invalid_argument("store_mass_fraction must be in (0, 1)");
  }
  if (!(d.power_volume_fraction > 0.0 && d.power_volume_fraction <= 1.0)) {
    throw std::invalid_argument("power_volume_fraction must be in (0, 1]");
  }
  if (!(d.antenna_efficiency > 0.0 && d.antenna_efficiency <= 1.0)) {
    throw std::invalid_argument("antenna_efficiency must be in (0, 1]");
  }
}

} // namespace microrover
