#pragma once

#include <Eigen/Dense>
#include <random>

#include "liestat/cubic_form.hpp"
#include "liestat/inner_product.hpp"
#include "liestat/lie_algebra.hpp"
#include "liestat/presets.hpp"

namespace liestat::test {

inline Eigen::VectorXd unit(int n, int i) { return Eigen::VectorXd::Unit(n, i); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, int n, double scale = 1.0) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = scale * uniform(rng, -1.0, 1.0);
  return m;
}

inline Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, int n) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_matrix(rng, n));
  Eigen::MatrixXd q = qr.householderQ();
  // fix sign convention so Q is deterministic given the input
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  return q;
}

inline InnerProduct random_gram(std::mt19937_64& rng, int n) {
  const Eigen::MatrixXd a = random_matrix(rng, n);
  return InnerProduct(a.transpose() * a + 0.5 * Eigen::MatrixXd::Identity(n, n));
}

inline LieAlgebra random_milnor(std::mt19937_64& rng) {
  return MilnorFrameSpec{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)}.algebra();
}

inline LieAlgebra random_nonuni(std::mt19937_64& rng) {
  return NonUnimodularSpec{uniform(rng, 0, 1.5), uniform(rng, 0, 1.5)}.algebra();
}

inline LieAlgebra random_algebra(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return random_milnor(rng);
    case 1: return random_nonuni(rng);
    case 2: return change_frame(random_milnor(rng), random_orthogonal(rng, 3));
    default: return change_frame(random_nonuni(rng), random_orthogonal(rng, 3));
  }
}

inline CubicForm random_cubic(std::mt19937_64& rng, int n, double scale = 1.0) {
  Eigen::VectorXd comps(CubicForm::component_count(n));
  for (int i = 0; i < comps.size(); ++i) comps(i) = scale * uniform(rng, -1.0, 1.0);
  return CubicForm::from_components(n, comps);
}

}  // namespace liestat::test
