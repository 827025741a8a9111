#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "sched/nn/adam.hpp"
#include "sched/nn/epsilon.hpp"
#include "sched/nn/mlp.hpp"
#include "sched/nn/replay.hpp"
#include "sched/rng.hpp"

namespace sched::hrl {

inline constexpr int kLowStateDim = 6;
inline constexpr int kLowActionKeep = 0;
inline constexpr int kLowActionReallocate = 1;

struct DqnConfig {
  int state_dim = kLowStateDim;
  int n_actions = 2;
  std::vector<int> hidden{64, 64};
  double gamma = 0.95;
  double lr = 0.001;
  std::size_t replay_cap = 500'000;
  int batch = 64;
  nn::EpsilonSchedule epsilon{};
};

// Keep-or-reallocate monitor for tasks already in execution. Trains in
// bursts at episode boundaries, then refreshes its target net wholesale.
class DqnPolicy {
 public:
  DqnPolicy(DqnConfig cfg, std::uint64_t init_seed);

  int select(const Eigen::VectorXd& state, bool explore, Rng& rng);

  void push(const Eigen::VectorXd& state, int action, double reward,
            const Eigen::VectorXd& next_state, double done);

  // Replays roughly everything gathered since the last call, one minibatch
  // per chunk, then hard-copies the target net. Returns minibatches run.
  int end_episode_update(Rng& rng);

  // One gradient step on a sampled minibatch; returns the pre-step loss.
  double train_minibatch(Rng& rng);

  double epsilon_now() const { return cfg_.epsilon.at(selection_steps_); }
  std::uint64_t selection_steps() const { return selection_steps_; }
  std::size_t buffer_size() const { return replay_.size(); }
  const nn::MlpNet& qnet() const { return qnet_; }

  void save_models(const std::string& dir) const;
  void load_models(const std::string& dir);
  void save_state(std::ostream& out) const;
  void load_state(std::istream& in);

 private:
  DqnConfig cfg_;
  nn::MlpNet qnet_, target_;
  nn::AdamOpt opt_;
  nn::ReplayBuffer<Eigen::VectorXd> replay_;
  std::uint64_t selection_steps_ = 0;
  std::uint64_t new_since_update_ = 0;
};

}  // namespace sched::hrl
