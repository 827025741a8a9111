#pragma once

#include "sched/hrl/weights.hpp"

namespace sched::hrl {

// Inputs for the assignment penalty bundle. Everything is already resolved
// to scalars so the functions stay pure and table-testable. At assignment
// time the actual draw is unknown; callers pass e_actual_j = e_estimate_j
// and charge the under-estimate term later, once the task resolves.
struct AssignmentContext {
  double e_planned_j = 0.0;   // buffered energy estimate for the task
  double e_max_j = 1.0;       // battery capacity of the chosen satellite
  double e_estimate_j = 0.0;  // raw energy estimate
  double e_actual_j = 0.0;    // measured draw once the task resolves
  double projected_end_s = 0.0;
  double deadline_s = 0.0;
  double horizon_s = 1.0;
  double compute_load_after = 0.0;  // satellite load including this task
  double xi_max = 1.0;
  bool slot_conflict = false;  // another agent claimed the slot first
};

struct PenaltyTerms {
  double p1 = 0.0;  // energy pressure / overdraw
  double p2 = 0.0;  // projected deadline overrun
  double p3 = 0.0;  // energy under-estimation
  double p4 = 0.0;  // compute overload
  double p5 = 0.0;  // double claim
  double sum() const { return p1 + p2 + p3 + p4 + p5; }
};

PenaltyTerms penalty_terms(const AssignmentContext& ctx, const RewardWeights& w);

// The under-estimation term alone, for charging at resolution time when
// the actual draw becomes known.
double underestimate_penalty(double e_actual_j, double e_estimate_j, double e_max_j,
                             const RewardWeights& w);

// How well the satellite was pointed for the job.
inline double orientation_reward(double delta_theta_rad, double alpha) {
  return -alpha * delta_theta_rad;
}

// Margin between projected completion and the close of the task's window,
// normalized by the episode horizon.
inline double window_reward(double t_f_s, double t_s, double delta_t_s, double horizon_s) {
  return (t_f_s - (t_s + delta_t_s)) / horizon_s;
}

// One assignment-level reward, kept as raw components so logs can show
// where the signal came from. total() applies the weight vector.
struct RewardBreakdown {
  double p_s = 1.0;  // priority score attached to the outcome credit
  double r_a = 0.0;  // task outcome: +1 completed, -1 failed, 0 pending
  double r_p = 0.0;  // aggregated penalties, always <= 0
  double r_e = 0.0;  // orientation, always <= 0
  double r_c = 0.0;  // window positioning margin
  double f = 0.0;    // execution feedback from the low level
  double total(const RewardWeights& w) const {
    return p_s * w.w9 * r_a + w.w10 * r_p + w.w11 * r_e + w.w12 * r_c + f;
  }
};

RewardBreakdown reward_high(double p_s, double r_a, const PenaltyTerms& penalties, double r_e,
                            double r_c, double f);

// Credit granted when a task resolves: +1 completed, -1 failed, weighted
// by the priority score attached at assignment time.
inline double outcome_credit(bool completed, double p_s, const RewardWeights& w) {
  return p_s * w.w9 * (completed ? 1.0 : -1.0);
}

// --- low level (keep / reallocate) ---

// Energy branch: holding a task the battery comfortably covers is good,
// shedding it is churn; holding one it cannot cover is the worst case and
// shedding it then is the intended corrective act (reward 0).
double reward_energy(double energy_j, double e_estimate_j, int complexity_tier, bool reallocate,
                     const RewardWeights& w);

// Deadline branch: the safety margin demanded grows with the priority tier.
double reward_deadline(double time_to_deadline_s, double remaining_required_s, int priority_tier,
                       bool reallocate, const RewardWeights& w);

inline double reward_failure(bool sat_failed, const RewardWeights& w) {
  return sat_failed ? -w.kappa : 0.0;
}

inline double reward_low_total(double r_energy, double r_deadline, double r_failure) {
  return r_energy + r_deadline + r_failure;
}

// Execution feedback passed back to the assignment level: positive when the
// task is ahead of schedule and under energy budget, dragged down by
// reallocation churn. Times are normalized by the horizon, energies by
// battery capacity.
double feedback_score(double deadline_s, double now_s, double remaining_required_s,
                      double horizon_s, double energy_j, double e_estimate_remaining_j,
                      double e_max_j, int n_reallocations, const RewardWeights& w);

}  // namespace sched::hrl
