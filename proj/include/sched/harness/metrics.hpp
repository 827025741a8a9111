#pragma once

#include <string>
#include <vector>

namespace sched::harness {

inline constexpr const char* kMetricsHeader =
    "episode,policy,seed,cumulative_reward,makespan_s,tasks_completed,tasks_failed,"
    "success_rate,reallocations,estimator_mape,wall_time_s";

// One completed-task estimator observation, kept for error-trend analysis.
struct EstimatorRecordRow {
  int episode = 0;
  double t_s = 0.0;
  int task_id = -1;
  double e_estimate_j = 0.0;
  double e_actual_j = 0.0;
  double ape = 0.0;
};

struct EpisodeMetrics {
  int episode = 0;
  std::string policy;
  std::uint64_t seed = 0;
  double cumulative_reward = 0.0;
  double makespan_s = 0.0;
  int tasks_completed = 0;
  int tasks_failed = 0;
  double success_rate = 0.0;
  int reallocations = 0;
  double estimator_mape = 0.0;
  double wall_time_s = 0.0;
};

std::string metrics_row(const EpisodeMetrics& m);
EpisodeMetrics parse_metrics_row(const std::string& line);

inline constexpr const char* kEstimatorRecordsHeader =
    "episode,t_s,task_id,e_estimate_j,e_actual_j,ape";
std::string estimator_record_row(const EstimatorRecordRow& r);

}  // namespace sched::harness
