#pragma once

#include <Eigen/Dense>
#include <deque>
#include <iosfwd>

#include "sched/nn/adam.hpp"
#include "sched/nn/mlp.hpp"
#include "sched/rng.hpp"

namespace sched::est {

// Learned per-task energy cost model. Inputs are the eight scaled task
// features plus the complexity score; the target is actual consumption,
// scaled by the largest value seen so the net trains near unit range.
//
// Until enough outcomes accumulate it falls back to a running mean with a
// flat safety buffer. Afterwards the buffer scales with task complexity and
// shrinks as accuracy improves relative to where it started.
class EnergyEstimator {
 public:
  struct Config {
    int hidden1 = 128, hidden2 = 64;
    double lr = 0.001;
    std::size_t dataset_cap = 4096;
    int cold_start_min = 20;      // completions before the net takes over
    double prior_mean_j = 50.0;   // mean used before any data arrives
    double buffer_base = 0.05;    // max relative safety margin
    int mape_window = 50;
    double retrain_threshold = 0.15;
    int trigger_spacing = 10;     // records between trigger checks
    int trigger_consecutive = 3;  // bad checks in a row to force retrain
    int retrain_epochs = 200;
    int periodic_epochs = 10;
    int periodic_min_growth = 25;  // new records needed before a refresh
  };

  EnergyEstimator(Config cfg, std::uint64_t init_seed);

  double estimate(const Eigen::VectorXd& scaled_features, double c_s) const;
  double buffered_estimate(const Eigen::VectorXd& scaled_features, double c_s) const;

  // Feeds one completed execution back. Returns the absolute percentage
  // error of the pre-update estimate, which is also what drives retrains.
  double record_outcome(const Eigen::VectorXd& scaled_features, double c_s, double e_actual_j);

  // Light refresh; trains only when the dataset grew enough since the
  // last fit. Returns whether training ran.
  bool maybe_periodic_fit();

  void fit(int epochs);

  std::size_t n_records() const { return inputs_.size(); }
  double recent_mape() const;
  bool cold() const {
    return !warm_override_ && static_cast<int>(inputs_.size()) < cfg_.cold_start_min;
  }
  // Treat the network as trained even with an empty dataset; used after
  // loading a model snapshot that carries no training records.
  void mark_warm() { warm_override_ = true; }
  int retrain_count() const { return retrains_; }

  // Portable model snapshot: network text plus the target scale.
  void save_model(std::ostream& out) const;
  void load_model(std::istream& in);

  // Full training state, bit-exact, for crash resume.
  void save_state(std::ostream& out) const;
  void load_state(std::istream& in);

 private:
  double net_estimate(const Eigen::VectorXd& scaled_features, double c_s) const;
  double buffer_shrink() const;
  void check_retrain_trigger();

  Config cfg_;
  nn::MlpNet net_;
  nn::AdamOpt opt_;
  std::deque<Eigen::VectorXd> inputs_;  // feature vector with c_s appended
  std::deque<double> targets_;          // raw joules
  std::deque<double> weights_;          // 1 + c_s
  std::deque<double> ape_window_;
  double target_scale_ = 1.0;
  double mean_acc_ = 0.0;  // running mean of actual consumption
  std::uint64_t mean_n_ = 0;
  double initial_mape_ = -1.0;  // frozen once the window first fills
  std::uint64_t record_count_ = 0;
  std::uint64_t records_at_last_fit_ = 0;
  int consecutive_bad_ = 0;
  int retrains_ = 0;
  bool warm_override_ = false;
};

}  // namespace sched::est
