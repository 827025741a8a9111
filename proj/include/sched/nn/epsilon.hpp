#pragma once

#include <algorithm>
#include <cstdint>

namespace sched::nn {

// Linear exploration-rate decay over a fixed step budget, constant afterwards.
struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.01;
  std::int64_t decay_steps = 50000;

  double at(std::int64_t step) const {
    if (decay_steps <= 0) return end;
    const double f = std::min(1.0, static_cast<double>(step) / static_cast<double>(decay_steps));
    return start + (end - start) * f;
  }
};

}  // namespace sched::nn
