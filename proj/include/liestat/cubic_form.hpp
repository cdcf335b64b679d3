#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "liestat/inner_product.hpp"
#include "liestat/lie_algebra.hpp"

namespace liestat {

/// Fully symmetric 3-tensor C_{ijk}, stored as its dim(dim+1)(dim+2)/6
/// independent components in lexicographic multiset order (i <= j <= k).
/// Total symmetry is structural: get/set go through the sorted triple.
class CubicForm {
 public:
  explicit CubicForm(int dim);

  static int component_count(int dim) { return dim * (dim + 1) * (dim + 2) / 6; }

  /// Sorted triples (i,j,k), i<=j<=k, in canonical order.
  static const std::vector<std::array<int, 3>>& triples(int dim);
  static int flat_index(int dim, int i, int j, int k);

  static CubicForm from_components(int dim, const Eigen::VectorXd& components);

  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const { return comps_(flat_index(dim_, i, j, k)); }
  void set(int i, int j, int k, double value) { comps_(flat_index(dim_, i, j, k)) = value; }

  const Eigen::VectorXd& components() const { return comps_; }

  double norm() const { return comps_.norm(); }
  double max_abs() const { return comps_.size() ? comps_.cwiseAbs().maxCoeff() : 0.0; }

  CubicForm scaled(double s) const;

 private:
  int dim_;
  Eigen::VectorXd comps_;
};

/// Skewness operator K^l_{ij} (value of K(e_i)e_j), metric dual of a cubic
/// form: g(K(e_i)e_j, e_k) = C(e_i,e_j,e_k).
class SkewnessOperator {
 public:
  SkewnessOperator() = default;
  explicit SkewnessOperator(BilinearMap k) : k_(std::move(k)) {}

  int dim() const { return k_.dim(); }
  const BilinearMap& map() const { return k_; }
  const Eigen::MatrixXd& op(int i) const { return k_.slot(i); }
  Eigen::MatrixXd op(const Eigen::VectorXd& x) const { return k_.contract(x); }

  /// Max violation of K(X)Y = K(Y)X over the frame.
  double symmetry_defect() const;
  /// Max violation of <K(e_i)e_j, e_k> = <e_j, K(e_i)e_k>.
  double self_adjointness_defect(const InnerProduct& ip) const;

 private:
  BilinearMap k_;
};

SkewnessOperator skewness_from_cubic(const InnerProduct& ip, const CubicForm& cubic);

/// Inverse of skewness_from_cubic; rejects K whose induced C is not totally
/// symmetric within tol.
CubicForm cubic_from_skewness(const InnerProduct& ip, const SkewnessOperator& k,
                              double tol = 1e-9);

}  // namespace liestat
