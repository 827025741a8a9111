#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sched/rng.hpp"
#include "sched/sim/cubesat.hpp"
#include "sched/sim/scenario.hpp"
#include "sched/sim/solar.hpp"
#include "sched/sim/task.hpp"

namespace sched::sim {

enum class EventType { TaskCompleted, TaskFailed, SatFailed, SatRecovered, TaskArrived };

struct Event {
  EventType type;
  int task_id = -1;
  int sat_id = -1;
  bool requeued = false;  // TaskArrived: re-entry rather than a fresh arrival
};

// Per-claim execution bookkeeping: slew first, then execution accrues only
// inside the observation window.
struct ExecInfo {
  int task_id = -1;
  double claim_time_s = 0.0;
  double slew_end_s = 0.0;
  double slew_power_w = 0.0;
  double exec_power_w = 0.0;
  double elapsed_s = 0.0;       // execution time accumulated inside the window
  double e_actual_j = 0.0;      // hidden total cost of this run
  double delta_theta_rad = 0.0;
};

// One episode's mutable world. Construct fresh from a Scenario per episode;
// all stochasticity flows through the rng handed to claim()/step().
class World {
 public:
  explicit World(const Scenario& sc);

  double now() const { return t_; }
  double horizon_s() const { return scenario_->sim_horizon_s; }
  double period_s() const { return period_; }
  bool done() const { return t_ >= horizon_s(); }

  const Scenario& scenario() const { return *scenario_; }
  const std::vector<CubeSatState>& sats() const { return sats_; }
  CubeSatState& sat(int id) { return sats_[id]; }
  const CubeSatState& sat(int id) const { return sats_[id]; }
  const OrbitConfig& orbit(int sat_id) const { return orbits_[sat_id]; }
  TaskStore& store() { return store_; }
  const TaskStore& store() const { return store_; }

  // Assign a task to a satellite now. Draws the hidden execution cost.
  ClaimResult claim(int task_id, int sat_id, Rng& rng);

  // in_progress -> unassigned. count_realloc marks a policy decision (bumps
  // the task's reallocation counter); dormancy requeues pass false.
  void release_claim(int task_id, bool count_realloc);

  const ExecInfo* exec_of(int sat_id) const {
    return exec_[sat_id].has_value() ? &*exec_[sat_id] : nullptr;
  }
  // Execution record of a task that reached a terminal status while claimed.
  const ExecInfo* resolved_exec(int task_id) const {
    auto it = resolved_.find(task_id);
    return it == resolved_.end() ? nullptr : &it->second;
  }

  double dormancy_threshold_j(int sat_id) const {
    return scenario_->power.dormancy_frac * sats_[sat_id].e_max_j;
  }

  // One physics step: energy integration, task progress/expiry, failure
  // sampling, task arrivals — in that order.
  std::vector<Event> step(double dt, Rng& rng);

  // Bare-sim behavior: a satellite failure kills its in-progress task. The
  // harness turns this off when the low-level controller is around to react.
  bool fail_task_on_sat_failure = true;

 private:
  void free_sat(int sat_id);

  const Scenario* scenario_;
  double t_ = 0.0;
  double period_;
  std::vector<CubeSatState> sats_;
  std::vector<OrbitConfig> orbits_;
  std::vector<std::optional<ExecInfo>> exec_;
  TaskStore store_;
  std::vector<int> arrival_order_;  // task indices sorted by arrival time
  std::size_t next_arrival_ = 0;
  std::map<int, ExecInfo> resolved_;
};

}  // namespace sched::sim
