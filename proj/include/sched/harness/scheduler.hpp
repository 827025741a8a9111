#pragma once

#include <memory>
#include <string>

#include "sched/estimator/energy_estimator.hpp"
#include "sched/harness/metrics.hpp"
#include "sched/harness/run_config.hpp"
#include "sched/hrl/dqn.hpp"
#include "sched/hrl/high_state.hpp"
#include "sched/hrl/maddpg.hpp"
#include "sched/sabe/encoder.hpp"
#include "sched/sim/scenario.hpp"

namespace sched::harness {

struct EpisodeOutcome {
  EpisodeMetrics metrics;  // episode index / policy / seed left for the caller
  std::vector<EstimatorRecordRow> est_rows;  // completions seen by the estimator
};

// Runs episodes of one policy preset against a scenario: drives the world,
// the task scoring, the assignment agents, and the keep/reallocate monitor,
// and owns everything that persists across episodes. Training mutates that
// persistent state; evaluation episodes leave it untouched and are fully
// determined by (scenario, episode_seed).
class Scheduler {
 public:
  Scheduler(const RunConfig& cfg, std::uint64_t master_seed);

  EpisodeOutcome run_episode(const sim::Scenario& sc, std::uint64_t episode_seed, bool train);

  // Light estimator refresh; the trainer calls this between episodes.
  void periodic_estimator_fit();

  const PolicyTraits& traits() const { return traits_; }
  const RunConfig& config() const { return cfg_; }
  bool has_high() const { return high_ != nullptr; }
  bool has_low() const { return low_ != nullptr; }
  hrl::MaddpgAgents& high() { return *high_; }
  hrl::DqnPolicy& low() { return *low_; }
  est::EnergyEstimator& estimator() { return est_; }
  sabe::SabeEncoder& encoder() { return sabe_; }

  // Portable model files plus exact sidecar state, one directory per
  // checkpoint. load expects a directory produced by save.
  void save_checkpoint(const std::string& dir) const;
  void load_checkpoint(const std::string& dir);

  // Bit-exact persistent state for crash resume.
  void save_train_state(std::ostream& out) const;
  void load_train_state(std::istream& in);

 private:
  struct Run;
  void process_events(Run& run, const std::vector<sim::Event>& events);
  void resolve_task(Run& run, int task_id, bool completed);
  void rescue_failed_sat(Run& run, int sat_id);
  void low_tick(Run& run);
  void decision_epoch(Run& run);
  void close_pending_low(Run& run, int task_id, const Eigen::VectorXd& next_state, double done);
  void emit_feedback(Run& run, double f);
  void credit(Run& run, int sat_id, double amount);
  void try_claim(Run& run, int sat_id, const hrl::SlotView& slot);

  RunConfig cfg_;
  PolicyTraits traits_;
  hrl::RewardWeights w_;
  std::unique_ptr<hrl::MaddpgAgents> high_;
  std::unique_ptr<hrl::DqnPolicy> low_;
  est::EnergyEstimator est_;
  sabe::SabeEncoder sabe_;
};

}  // namespace sched::harness
