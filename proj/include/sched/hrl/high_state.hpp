#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sched/sim/world.hpp"

namespace sched::hrl {

inline constexpr int kSlotCount = 8;
inline constexpr int kSatFeatureDim = 6;

// One queue slot offered to the assignment agents: a viable task plus the
// scores and energy estimate attached to it.
struct SlotView {
  const sim::Task* task = nullptr;  // null marks a padded slot
  double p_s = 0.0;
  double c_s = 0.0;
  int complexity_tier = 1;
  int priority_tier = 1;
  double e_estimate_j = 0.0;        // raw energy estimate
  double e_buffered_j = 0.0;        // estimate with the safety margin
  Eigen::VectorXd scaled_features;  // estimator input, kept for records
};

inline int slot_feature_dim(int n_sats) { return 6 + n_sats; }

inline int high_state_dim(int n_sats, int n_slots = kSlotCount) {
  return kSatFeatureDim * n_sats + n_slots * slot_feature_dim(n_sats) + 1;
}

// Required slew to point a satellite at a slot's target, in radians.
double slew_angle_rad(const sim::World& world, int sat_id, const sim::Task& task);

// Global observation shared by every assignment agent: per-satellite
// health, the top queue slots with per-satellite slew angles, and the
// squashed execution-feedback signal.
Eigen::VectorXd build_high_state(const sim::World& world, const std::vector<SlotView>& slots,
                                 double feedback_mean);

}  // namespace sched::hrl
