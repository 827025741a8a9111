#pragma once

#include <Eigen/Dense>
#include <istream>
#include <ostream>
#include <vector>

#include "sched/nn/mlp.hpp"

namespace sched::nn {

struct AdamConfig {
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// One optimizer per net; first/second moments mirror the net's parameters and
// a single step counter drives bias correction.
class AdamOpt {
 public:
  AdamOpt() = default;
  AdamOpt(const MlpNet& net, AdamConfig cfg);

  void step(MlpNet& net, const Gradients& grads);

  long steps_taken() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

  void save(std::ostream& os) const;
  void load(std::istream& is, const MlpNet& net);

 private:
  AdamConfig cfg_;
  long t_ = 0;
  std::vector<Eigen::MatrixXd> mW_, vW_;
  std::vector<Eigen::VectorXd> mb_, vb_;
};

}  // namespace sched::nn
