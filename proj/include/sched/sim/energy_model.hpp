#pragma once

#include <algorithm>

#include "sched/rng.hpp"
#include "sched/sim/task.hpp"

namespace sched::sim {

// Hidden ground truth for what a task actually costs; the estimator has to
// learn this from outcomes. Constants are fixed per scenario.
struct EnergyCostModel {
  double c1 = 2.0;       // J per compute-unit-second
  double c2 = 0.05;      // J per MB
  double c3 = 20.0;      // J per radian of slew
  double sigma_rel = 0.05;

  double base_cost(const Task& t, double delta_theta_rad) const {
    return c1 * t.compute_req * t.duration_s + c2 * t.memory_req +
           c3 * std::abs(delta_theta_rad);
  }

  double sample_cost(const Task& t, double delta_theta_rad, Rng& rng) const {
    const double base = base_cost(t, delta_theta_rad);
    const double noisy = sigma_rel > 0.0 ? base + rng.normal(0.0, sigma_rel) * base : base;
    return std::max(0.0, noisy);
  }
};

}  // namespace sched::sim
