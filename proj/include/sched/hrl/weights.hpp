#pragma once

#include <cmath>
#include <stdexcept>

namespace sched::hrl {

// Reward shaping knobs for both scheduler levels. Defaults are the tuned
// values used by the shipped presets.
struct RewardWeights {
  // high level: assignment reward composition
  double w9 = 10.0;   // task outcome credit
  double w10 = 1.0;   // penalty bundle
  double w11 = 1.0;   // attitude slew cost
  double w12 = 1.0;   // deadline margin bonus
  double alpha = 0.1; // radians-to-penalty slope for slews

  // penalty bundle
  double beta = 10.0;    // energy overdraw slope
  double beta2 = 10.0;   // projected deadline overrun slope
  double lambda2 = 1.0;  // estimate-pessimism pressure
  double beta4 = 5.0;    // compute overload slope
  double beta5 = 5.0;    // double-claim penalty

  // low level: keep/reallocate shaping
  double lambda_e = 1.0;  // energy-margin branch reward
  double ell = -5.0;      // holding a task the battery cannot cover
  double phi = 1.0;       // deadline-margin branch reward
  double psi = -5.0;      // holding a task that is behind schedule
  double kappa = 10.0;    // losing the host satellite

  // feedback signal
  double w13 = 1.0;   // timing slack term
  double w14 = 1.0;   // energy slack term
  double w15 = -0.5;  // reallocation-count term

  void validate() const {
    for (double v : {w9, w10, w11, w12, alpha, beta, beta2, lambda2, beta4, beta5, lambda_e, ell,
                     phi, psi, kappa, w13, w14, w15})
      if (!std::isfinite(v)) throw std::runtime_error("reward weights must be finite");
    if (w9 < 0 || w10 < 0 || w11 < 0 || w12 < 0 || alpha < 0 || beta < 0 || beta2 < 0 ||
        lambda2 < 0 || beta4 < 0 || beta5 < 0 || kappa < 0)
      throw std::runtime_error("reward magnitudes must be non-negative");
  }
};

}  // namespace sched::hrl
