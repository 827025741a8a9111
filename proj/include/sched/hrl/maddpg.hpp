#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "sched/nn/adam.hpp"
#include "sched/nn/mlp.hpp"
#include "sched/nn/ou_noise.hpp"
#include "sched/nn/replay.hpp"
#include "sched/rng.hpp"

namespace sched::hrl {

struct MaddpgConfig {
  int n_agents = 3;
  int state_dim = 0;
  int n_actions = 9;
  std::vector<int> actor_hidden{256, 128};
  std::vector<int> critic_hidden{256, 128, 64};
  double gamma = 0.99;
  double tau = 0.005;
  double actor_lr = 0.001;
  double critic_lr = 0.002;
  std::size_t replay_cap = 1'000'000;
  // Updates stay off until the buffer holds this many transitions so the
  // first gradients see a mix of outcomes instead of the opening chaos.
  std::size_t replay_min = 12'800;
  int batch = 128;
  int actor_update_every = 4;  // critic trains every step, actors less often
  double ou_theta = 0.15;
  // Wider than the textbook 0.2: exploration must survive the logit gaps a
  // trained softmax builds up, or the argmax freezes permanently.
  double ou_sigma = 1.0;
  double ou_mu = 0.0;
  double ou_dt = 1.0;
};

struct JointAction {
  Eigen::MatrixXd probs;    // n_actions x n_agents
  std::vector<int> chosen;  // argmax per agent
};

// Cooperative assignment learner: one softmax actor per satellite acting
// on the shared observation, one centralized critic per satellite that
// sees everyone's action distribution. Exploration perturbs the actor
// logits with correlated noise before the softmax.
class MaddpgAgents {
 public:
  MaddpgAgents(MaddpgConfig cfg, std::uint64_t init_seed);

  JointAction select(const Eigen::VectorXd& state, bool explore, Rng& rng);
  void reset_noise();

  void push(const Eigen::VectorXd& state, const Eigen::MatrixXd& probs,
            const Eigen::VectorXd& rewards, const Eigen::VectorXd& next_state, double done);

  // One training round; critics always, actors on the configured cadence.
  // No-op until the buffer can fill a batch. Returns whether it trained.
  bool update(Rng& rng);

  std::size_t buffer_size() const { return replay_.size(); }
  std::uint64_t update_count() const { return update_count_; }
  const MaddpgConfig& config() const { return cfg_; }
  const nn::MlpNet& actor(int i) const { return actors_[static_cast<std::size_t>(i)]; }

  void save_models(const std::string& dir) const;
  void load_models(const std::string& dir);
  void save_state(std::ostream& out) const;
  void load_state(std::istream& in);

 private:
  Eigen::Index transition_dim() const;
  void train_critic(int agent, const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);
  void train_actor(int agent, const Eigen::MatrixXd& states, const Eigen::MatrixXd& joint);

  MaddpgConfig cfg_;
  std::vector<nn::MlpNet> actors_, critics_, target_actors_, target_critics_;
  std::vector<nn::AdamOpt> actor_opts_, critic_opts_;
  std::vector<nn::OuNoise> noise_;
  nn::ReplayBuffer<Eigen::VectorXd> replay_;
  std::uint64_t update_count_ = 0;
};

}  // namespace sched::hrl
