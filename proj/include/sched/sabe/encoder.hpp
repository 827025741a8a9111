#pragma once

#include <Eigen/Dense>
#include <deque>
#include <iosfwd>
#include <vector>

#include "sched/sabe/scores.hpp"
#include "sched/sim/task.hpp"

namespace sched::sabe {

inline constexpr int kTaskFeatureDim = 8;

// Static attributes of a task, in a fixed order, used both for history
// matching and as estimator inputs:
//   [duration, compute_req, memory_req, window_length, deadline_slack,
//    target_lat, target_lon, priority]
Eigen::VectorXd raw_task_features(const sim::Task& task);

struct HistoryRecord {
  Eigen::VectorXd raw_features;  // kTaskFeatureDim, unscaled
  double recorded_at_s = 0.0;
  double discrepancy = 0.0;   // |E_a - E_e| / max(E_e, eps), capped
  bool failure = false;       // bad estimate or outright task failure
  double time_gap_s = 0.0;    // actual minus required execution time
};

struct HistoryAggregates {
  double h_f = 0.0;        // attention-weighted failure rate
  double delta_t_e = 0.0;  // attention-weighted mean time gap, seconds
  double support = 0.0;    // total attention mass behind the aggregates
};

struct ScoredTask {
  int task_id = -1;
  double c_s = 0.0;  // complexity score, [0,1]
  double p_s = 0.0;  // priority score, [0,1]
  int complexity_tier = 1;
  int priority_tier = 1;
  Eigen::VectorXd scaled_features;  // kTaskFeatureDim, [0,1] per dim
  double h_f = 0.0;
  double delta_t_e_s = 0.0;
  double support = 0.0;
};

// Scores a task queue against execution history. Similar past tasks are
// found by cosine similarity over min-max-scaled features, weighted down
// by age and up by estimation error; their failure rate and timing slack
// feed the complexity and priority scores. TOPSIS over each score's
// ingredients splits the queue into five tiers.
class SabeEncoder {
 public:
  SabeEncoder(ScoreWeights weights, std::size_t history_cap = 2000);

  // `horizon_s` bounds the urgency feature; `now` anchors recency decay
  // and urgency. Output order matches input order.
  std::vector<ScoredTask> score_tasks(const std::vector<const sim::Task*>& tasks, double now,
                                      double horizon_s);

  void record_outcome(const sim::Task& task, double claim_time_s, double end_time_s,
                      double e_estimated_j, double e_actual_j, bool failed);

  std::size_t history_size() const { return history_.size(); }
  const ScoreWeights& weights() const { return weights_; }

  HistoryAggregates aggregate_history(const Eigen::VectorXd& raw_query, double now) const;

  void save(std::ostream& out) const;
  void load(std::istream& in);

 private:
  ScoreWeights weights_;
  std::size_t history_cap_;
  std::deque<HistoryRecord> history_;
  RunningBounds feature_bounds_{kTaskFeatureDim};
  double gap_lo_ = std::numeric_limits<double>::infinity();
  double gap_hi_ = -std::numeric_limits<double>::infinity();
};

// Estimation counts as failed when it misses by more than this fraction.
inline constexpr double kEstimateMissFraction = 0.25;
// Attention boost from estimation error is capped so one pathological
// record cannot dominate the aggregate.
inline constexpr double kDiscrepancyCap = 5.0;

}  // namespace sched::sabe
