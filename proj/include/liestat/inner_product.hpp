#pragma once

#include <Eigen/Dense>

namespace liestat {

/// Inner product on the frame, given by its Gram matrix.  Index raising is
/// done by solving against the Gram matrix (Cholesky), never by forming the
/// inverse.
class InnerProduct {
 public:
  explicit InnerProduct(Eigen::MatrixXd gram, double tol = 1e-12);

  static InnerProduct orthonormal(int dim) {
    return InnerProduct(Eigen::MatrixXd::Identity(dim, dim));
  }

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Eigen::MatrixXd& gram() const { return gram_; }

  double pairing(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(gram_ * y);
  }

  /// Solves G x = rhs (columnwise for matrices).
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const { return llt_.solve(rhs); }

 private:
  Eigen::MatrixXd gram_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

}  // namespace liestat
