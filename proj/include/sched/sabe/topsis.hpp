#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace sched::sabe {

// Closeness of each alternative (row) to the ideal solution. Criteria are
// vector-normalized and weighted; `benefit[j]` marks larger-is-better
// columns. Degenerate cases: a single alternative scores 0.5, an all-zero
// column is skipped, and identical alternatives all score 0.5.
Eigen::VectorXd topsis_rank(const Eigen::MatrixXd& x, const Eigen::VectorXd& weights,
                            const std::vector<bool>& benefit);

inline constexpr std::array<double, 4> kTierThresholds{0.2, 0.4, 0.6, 0.8};

// Tier 1 is the lowest band; each threshold strictly below the closeness
// value bumps the tier by one, so the range is 1..5.
inline int tier_of(double closeness) {
  int tier = 1;
  for (double t : kTierThresholds)
    if (t < closeness) ++tier;
  return tier;
}

}  // namespace sched::sabe
