#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sched/hrl/weights.hpp"
#include "sched/sabe/scores.hpp"

namespace sched::harness {

enum class PolicyKind { Random, Maddpg, HierrlNoSabe, Hierrl };

PolicyKind policy_from_name(const std::string& name);
std::string policy_name(PolicyKind kind);

// What each named policy actually switches on. The learned presets differ
// only in which parts of the stack run live versus being pinned constants.
struct PolicyTraits {
  bool use_sabe = false;         // live scoring vs pinned constants
  double const_p_s = 1.0;        // priority score when scoring is pinned
  double const_c_s = 0.5;        // complexity score when scoring is pinned
  int const_tier = 3;            // both tiers when scoring is pinned
  bool estimator_learns = false; // false: running-mean predictor forever
  bool use_low_level = false;    // keep/reallocate monitor active
  bool high_learner = false;     // assignment policy trains (vs random)
  bool kill_task_on_sat_failure = true;  // no monitor around to rescue
};

PolicyTraits traits_for(PolicyKind kind);

// One training or evaluation run, as described by a JSON config file.
// Unknown keys anywhere in the file are rejected.
struct RunConfig {
  PolicyKind policy = PolicyKind::Hierrl;
  int n_cubesats = 3;
  int n_tasks = 30;
  int n_episodes = 2000;
  int K = 8;
  std::uint64_t seed = 1;
  std::string out_dir = "runs/out";
  std::string scenario_path;  // empty: generate from the run seed
  int eval_every = 100;       // 0 disables eval snapshots
  int eval_episodes = 5;
  int checkpoint_every = 200;
  double fail_prob = 0.02;    // per-orbit satellite failure probability
  double horizon_orbits = 10.0;
  bool record_wall_time = false;
  int low_level = -1;         // -1 preset default, 0 force off, 1 force on
  double decision_period_s = 60.0;
  double low_tick_period_s = 10.0;
  hrl::RewardWeights weights;
  sabe::ScoreWeights score_weights;
  // Comparison runs: policy name -> checkpoint directory pattern, with
  // {seed}, {n}, {m} substituted per cell.
  std::map<std::string, std::string> checkpoint_patterns;

  PolicyTraits traits() const;
  void validate() const;
};

RunConfig run_config_from_json(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string run_config_to_json(const RunConfig& cfg);

}  // namespace sched::harness
