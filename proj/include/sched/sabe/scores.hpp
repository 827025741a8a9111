#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sched::sabe {

// w1..w3 weight the complexity score, w4..w7 the priority score; each group
// is a convex combination so the scores stay inside [0,1].
struct ScoreWeights {
  double w1 = 1.0 / 3.0, w2 = 1.0 / 3.0, w3 = 1.0 / 3.0;
  double w4 = 0.25, w5 = 0.25, w6 = 0.25, w7 = 0.25;
  double lambda1 = 0.0;  // recency decay rate, 1/s; 0 disables decay

  void validate() const {
    const double s3 = w1 + w2 + w3, s4 = w4 + w5 + w6 + w7;
    if (w1 < 0 || w2 < 0 || w3 < 0 || w4 < 0 || w5 < 0 || w6 < 0 || w7 < 0)
      throw std::runtime_error("score weights must be non-negative");
    if (std::abs(s3 - 1.0) > 1e-9 || std::abs(s4 - 1.0) > 1e-9)
      throw std::runtime_error("score weight groups must each sum to 1");
    if (lambda1 < 0) throw std::runtime_error("lambda1 must be >= 0");
  }
};

// Per-dimension running min/max; ties map to 0.5 so constant dimensions
// carry no signal instead of blowing up.
class RunningBounds {
 public:
  explicit RunningBounds(int dim)
      : lo_(Eigen::VectorXd::Constant(dim, std::numeric_limits<double>::infinity())),
        hi_(Eigen::VectorXd::Constant(dim, -std::numeric_limits<double>::infinity())) {}

  void update(const Eigen::VectorXd& x) {
    lo_ = lo_.cwiseMin(x);
    hi_ = hi_.cwiseMax(x);
  }

  Eigen::VectorXd scale(const Eigen::VectorXd& x) const {
    Eigen::VectorXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = scale_one(x(i), lo_(i), hi_(i));
    return out;
  }

  static double scale_one(double v, double lo, double hi) {
    if (!(lo <= hi)) return 0.5;  // nothing seen yet
    if (hi == lo) return 0.5;
    return (v - lo) / (hi - lo);
  }

  const Eigen::VectorXd& lo() const { return lo_; }
  const Eigen::VectorXd& hi() const { return hi_; }
  void set(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) { lo_ = lo; hi_ = hi; }

 private:
  Eigen::VectorXd lo_, hi_;
};

inline Eigen::VectorXd minmax_scale(const Eigen::VectorXd& raw, const Eigen::VectorXd& lo,
                                    const Eigen::VectorXd& hi) {
  Eigen::VectorXd out(raw.size());
  for (Eigen::Index i = 0; i < raw.size(); ++i)
    out(i) = RunningBounds::scale_one(raw(i), lo(i), hi(i));
  return out;
}

inline double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return a.dot(b) / (na * nb);
}

inline double complexity_score(double c_d, double h_f, double d, const ScoreWeights& w) {
  return w.w1 * c_d + w.w2 * h_f + w.w3 * d;
}

inline double priority_score(double p, double d, double delta_t_e, double d_a,
                             const ScoreWeights& w) {
  return w.w4 * p + w.w5 * d + w.w6 * delta_t_e + w.w7 * d_a;
}

}  // namespace sched::sabe
