#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sched/rng.hpp"

namespace sched::nn {

enum class Activation { Relu, Linear, Softmax };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

// Per-layer parameter gradients, same shapes as MlpNet::W / MlpNet::b.
struct Gradients {
  std::vector<Eigen::MatrixXd> dW;
  std::vector<Eigen::VectorXd> db;

  void set_zero();
  Gradients& operator+=(const Gradients& other);
  Gradients& operator*=(double s);
};

// Intermediate activations kept around for the backward pass.
// a[0] is the input batch; z[l] / a[l+1] belong to layer l.
struct ForwardCache {
  std::vector<Eigen::MatrixXd> z;
  std::vector<Eigen::MatrixXd> a;
};

// Fully connected net. Batches are column-major: one sample per column.
// Hidden layers share one activation; the output layer has its own.
class MlpNet {
 public:
  MlpNet() = default;
  MlpNet(std::vector<int> dims, Activation hidden, Activation output);

  // U[-1/sqrt(fan_in), 1/sqrt(fan_in)] weights, zero biases. Coefficients are
  // drawn row-major per layer so a given rng stream always produces the same
  // net.
  void init_params(Rng& rng);

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& X) const;
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& X, ForwardCache& cache) const;

  // dLdA holds dL/d(output activations), one column per sample. Fills grads
  // (overwriting) and returns dL/d(input), which is what lets a critic's
  // action-gradient flow into an actor.
  Eigen::MatrixXd backward_batch(const ForwardCache& cache, const Eigen::MatrixXd& dLdA,
                                 Gradients& grads) const;

  Gradients zero_gradients() const;

  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  const std::vector<int>& dims() const { return dims_; }
  Activation hidden_activation() const { return hidden_; }
  Activation output_activation() const { return output_; }
  std::size_t layer_count() const { return W.size(); }

  std::vector<Eigen::MatrixXd> W;
  std::vector<Eigen::VectorXd> b;

 private:
  std::vector<int> dims_;
  Activation hidden_ = Activation::Relu;
  Activation output_ = Activation::Linear;
};

// target <- tau * online + (1 - tau) * target, layer by layer.
void soft_update(MlpNet& target, const MlpNet& online, double tau);

// L = mean over columns of ||pred - target||^2; dLdA = 2 (pred - target) / N.
double mse_loss(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target,
                Eigen::MatrixXd& dLdA);

// L = sum_i w_i ||pred_i - target_i||^2 / sum_i w_i.
double weighted_mse_loss(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target,
                         const Eigen::VectorXd& w, Eigen::MatrixXd& dLdA);

Eigen::VectorXd softmax(const Eigen::VectorXd& z);

}  // namespace sched::nn
