#pragma once

#include <vector>

#include "sched/sim/orbit.hpp"

namespace sched::sim {

struct TimeWindow {
  double start_s;
  double end_s;
  double length() const { return end_s - start_s; }
};

inline bool target_visible(const OrbitConfig& orbit, const GeoPoint& target, double t,
                           double cone_half_angle_rad) {
  return great_circle_angle(sub_satellite_point(orbit, t), target) <= cone_half_angle_rad;
}

// Intervals within [0, horizon] where the target sits inside the coverage
// cone (10 deg minimum elevation). Coarse scan plus bisection on the edges;
// the scan step is small enough that no pass longer than itself is missed.
std::vector<TimeWindow> visibility_windows(const OrbitConfig& orbit, double target_lat_deg,
                                           double target_lon_deg, double horizon_s,
                                           double min_elev_rad = 10.0 * kPi / 180.0,
                                           double scan_step_s = 15.0);

}  // namespace sched::sim
