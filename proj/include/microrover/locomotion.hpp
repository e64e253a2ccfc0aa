#pragma once

#include "microrover/design.hpp"
#include "microrover/units.hpp"

namespace microrover {

struct LocomotionModel {
  double specific_energy = 1.0;      // J/(kg m)
  double speed_in_lengths = 0.1;     // body lengths per second
  double jump_spring_energy = 25.0;  // J/kg of spring
  double spring_mass_fraction = 1.0;
};

void validate(const LocomotionModel& m);

template <typename Scalar>
Scalar traverse_speed(const Scalar& scale, double speed_in_lengths) {
  return speed_in_lengths * scale;
}

// mass * specific energy * speed; L^4 at fixed density.
template <typename Scalar>
Scalar traverse_power(const Scalar& scale, double bulk_density, const LocomotionModel& m) {
  const Scalar mass = bulk_density * scale * scale * scale;
  return mass * m.specific_energy * traverse_speed(scale, m.speed_in_lengths);
}

double traverse_power(const RoverDesign& d, const LocomotionModel& m = {});

double annual_range(const RoverDesign& d, const LocomotionModel& m = {},
                    const Constants& c = default_constants());

double jump_height(const LocomotionModel& m, double gravity);

} // namespace microrover
