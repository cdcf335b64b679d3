#include "liestat/inner_product.hpp"

#include <string>

#include "liestat/errors.hpp"

namespace liestat {

InnerProduct::InnerProduct(Eigen::MatrixXd gram, double tol) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
    throw ValidationError("inner product: Gram matrix must be square and nonempty");
  const double asym = (gram_ - gram_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw ValidationError("inner product: Gram matrix not symmetric, defect " +
                          std::to_string(asym));
  for (int k = 1; k <= gram_.rows(); ++k) {
    const double minor = gram_.topLeftCorner(k, k).determinant();
    if (minor <= tol)
      throw ValidationError("inner product: not positive definite (leading minor " +
                            std::to_string(k) + " = " + std::to_string(minor) + ")");
  }
  llt_.compute(gram_);
}

}  // namespace liestat
