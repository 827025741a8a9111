#pragma once

#include <string>

#include "sched/harness/run_config.hpp"
#include "sched/sim/scenario.hpp"

namespace sched::harness {

struct TrainResult {
  int episodes_run = 0;    // executed by this invocation
  int episodes_total = 0;  // rows in metrics.csv afterwards
  bool resumed = false;
  std::string out_dir;
};

// Resolves the run's scenario: loads cfg.scenario_path if set, otherwise
// generates one from the run seed.
sim::Scenario resolve_scenario(const RunConfig& cfg);

// Trains cfg.n_episodes episodes into cfg.out_dir, writing metrics.csv,
// estimator_records.csv, eval-snapshot/best/final checkpoints, and a resume
// checkpoint every checkpoint_every episodes. If the output directory holds
// a partial run, training continues from the last resume point and the
// resulting files are identical to an uninterrupted run.
TrainResult train_run(const RunConfig& cfg);

}  // namespace sched::harness
