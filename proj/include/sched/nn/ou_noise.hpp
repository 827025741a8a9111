#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "sched/rng.hpp"

namespace sched::nn {

// Ornstein-Uhlenbeck process for temporally correlated exploration noise:
//   x <- x + theta * (mu - x) * dt + sigma * sqrt(dt) * N(0, I)
// Components evolve independently.
class OuNoise {
 public:
  OuNoise() = default;
  OuNoise(int dim, double theta, double sigma, double mu, double dt)
      : theta_(theta), sigma_(sigma), mu_(mu), dt_(dt),
        x_(Eigen::VectorXd::Constant(dim, mu)) {}

  void reset() { x_.setConstant(mu_); }

  const Eigen::VectorXd& sample(Rng& rng) {
    for (Eigen::Index i = 0; i < x_.size(); ++i) step_component(i, rng.normal());
    return x_;
  }

  // One deterministic update with a supplied unit-normal draw per component.
  void step_component(Eigen::Index i, double unit_normal) {
    x_(i) += theta_ * (mu_ - x_(i)) * dt_ + sigma_ * std::sqrt(dt_) * unit_normal;
  }

  const Eigen::VectorXd& state() const { return x_; }
  void set_state(const Eigen::VectorXd& x) { x_ = x; }

 private:
  double theta_ = 0.15;
  double sigma_ = 0.2;
  double mu_ = 0.0;
  double dt_ = 1.0;
  Eigen::VectorXd x_;
};

}  // namespace sched::nn
