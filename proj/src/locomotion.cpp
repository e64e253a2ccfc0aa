#include "microrover/locomotion.hpp"

namespace microrover {

void validate(const LocomotionModel& m) {
  require_positive(m.specific_energy, "specific_energy");
  require_non_negative(m.speed_in_lengths, "speed_in_lengths");
  require_positive(m.jump_spring_energy, "jump_spring_energy");
  require_positive(m.spring_mass_fraction, "spring_mass_fraction");
}

double traverse_power(const RoverDesign& d, const LocomotionModel& m) {
  validate(d);
  validate(m);
  return traverse_power(d.scale, d.bulk_density, m);
}

double annual_range(const RoverDesign& d, const LocomotionModel& m, const Constants& c) {
  validate(d);
  validate(m);
  return traverse_speed(d.scale, m.speed_in_lengths) * c.seconds_per_year;
}

double jump_height(const LocomotionModel& m, double gravity) {
  validate(m);
  require_positive(gravity, "gravity");
  return m.jump_spring_energy * m.spring_mass_fraction / gravity;
}

} // namespace microrover
