#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "sched/rng.hpp"
#include "sched/sim/cubesat.hpp"
#include "sched/sim/task.hpp"

namespace sched::hrl {

// Observation for the keep/reallocate policy, one claimed task at a time:
// battery level, energy still needed, satellite health, a stable task
// fingerprint (so distinct tasks in identical situations stay
// distinguishable), the energy headroom, and the task's complexity score.
inline Eigen::VectorXd build_low_state(const sim::CubeSatState& sat, const sim::Task& task,
                                       double e_estimate_j, double c_s) {
  if (!sat.current_task.has_value() || *sat.current_task != task.id)
    throw std::runtime_error("low-level state requested for a task the satellite does not hold");

  const double e = sat.energy_j / sat.e_max_j;
  const double e_est = std::clamp(e_estimate_j / sat.e_max_j, 0.0, 1.0);
  const double failed = sat.status == sim::SatStatus::Failed ? 1.0 : 0.0;
  std::uint64_t h = static_cast<std::uint64_t>(task.id) + 1;
  const double fingerprint = static_cast<double>(splitmix64(h) % 1024) / 1024.0;
  const double gap = std::clamp((sat.energy_j - e_estimate_j) / sat.e_max_j, -1.0, 1.0);

  Eigen::VectorXd s(6);
  s << e, e_est, failed, fingerprint, gap, std::clamp(c_s, 0.0, 1.0);
  return s;
}

}  // namespace sched::hrl
