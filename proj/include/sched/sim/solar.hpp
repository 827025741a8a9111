#pragma once

#include "sched/sim/orbit.hpp"

namespace sched::sim {

struct SolarModel {
  double eta = 0.28;             // panel efficiency, constant per scenario
  double area_m2 = 0.006;        // effective panel area
  double solar_constant_w_m2 = kSolarConstWm2;
};

// Power harvested at time t: eta * A * I_sc * cos(theta_s), zero in eclipse
// or when the sun is behind the panel plane.
inline double replenish_rate(const SolarModel& s, const OrbitConfig& o, double t) {
  if (in_eclipse(o, t)) return 0.0;
  const double c = cos_sun_incidence(o, t);
  if (c <= 0.0) return 0.0;
  return s.eta * s.area_m2 * s.solar_constant_w_m2 * c;
}

}  // namespace sched::sim
