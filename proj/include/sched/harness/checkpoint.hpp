#pragma once

#include <cstdint>
#include <string>

#include "sched/harness/run_config.hpp"
#include "sched/harness/scheduler.hpp"

namespace sched::harness {

struct CheckpointInfo {
  RunConfig config;
  int episodes_done = 0;
  bool estimator_warm = false;
};

// A checkpoint directory holds the model files, the exact encoder/estimator
// sidecars, and a manifest describing the run that produced them.
void write_checkpoint(Scheduler& sched, const std::string& dir, int episodes_done);
CheckpointInfo read_checkpoint_info(const std::string& dir);

// Rebuilds a scheduler from a checkpoint for evaluation. low_level_override
// follows RunConfig::low_level (-1 keeps whatever the checkpoint trained with).
Scheduler load_scheduler(const std::string& dir, std::uint64_t master_seed,
                         int low_level_override = -1);

}  // namespace sched::harness
