#include "liestat/lie_algebra.hpp"

#include <cmath>
#include <string>

#include "liestat/errors.hpp"

namespace liestat {

Eigen::VectorXd BilinearMap::apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  for (int i = 0; i < dim(); ++i) out += x(i) * (slots_[i] * y);
  return out;
}

Eigen::MatrixXd BilinearMap::contract(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) out += x(i) * slots_[i];
  return out;
}

double BilinearMap::max_abs() const {
  double m = 0.0;
  for (const auto& s : slots_) m = std::max(m, s.cwiseAbs().maxCoeff());
  return m;
}

BilinearMap& BilinearMap::operator+=(const BilinearMap& other) {
  for (int i = 0; i < dim(); ++i) slots_[i] += other.slots_[i];
  return *this;
}

BilinearMap& BilinearMap::operator-=(const BilinearMap& other) {
  for (int i = 0; i < dim(); ++i) slots_[i] -= other.slots_[i];
  return *this;
}

BilinearMap& BilinearMap::operator*=(double s) {
  for (auto& m : slots_) m *= s;
  return *this;
}

double antisymmetry_defect(const BilinearMap& c) {
  double defect = 0.0;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k)
        defect = std::max(defect, std::abs(c.coeff(k, i, j) + c.coeff(k, j, i)));
  return defect;
}

double jacobi_defect(const BilinearMap& c) {
  const int n = c.dim();
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
        Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
        Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
        Eigen::VectorXd cyc = c.apply(c.apply(ei, ej), ek) +
                              c.apply(c.apply(ej, ek), ei) +
                              c.apply(c.apply(ek, ei), ej);
        defect = std::max(defect, cyc.cwiseAbs().maxCoeff());
      }
    }
  }
  return defect;
}

LieAlgebra::LieAlgebra(BilinearMap c, double tol) : c_(std::move(c)) {
  if (c_.dim() <= 0) throw ValidationError("lie algebra: dimension must be positive");
  const double anti = antisymmetry_defect(c_);
  if (anti > tol)
    throw ValidationError("lie algebra: antisymmetry violated, defect " + std::to_string(anti));
  const double jac = liestat::jacobi_defect(c_);
  if (jac > tol)
    throw ValidationError("lie algebra: Jacobi identity violated, defect " + std::to_string(jac));
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw ValidationError("bracket: vector length does not match algebra dimension");
  return c_.apply(x, y);
}

UnimodularKernel unimodular_kernel(const LieAlgebra& alg, double tol) {
  const int n = alg.dim();
  Eigen::RowVectorXd traces(n);
  for (int i = 0; i < n; ++i) traces(i) = alg.ad(i).trace();

  UnimodularKernel out;
  if (traces.cwiseAbs().maxCoeff() <= tol) {
    out.is_unimodular = true;
    for (int i = 0; i < n; ++i) out.basis.push_back(Eigen::VectorXd::Unit(n, i));
    return out;
  }
  out.is_unimodular = false;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(traces, Eigen::ComputeFullV);
  const Eigen::MatrixXd v = svd.matrixV();
  for (int c = 1; c < n; ++c) out.basis.push_back(v.col(c));  // rank is 1
  return out;
}

LieAlgebra change_frame(const LieAlgebra& alg, const Eigen::MatrixXd& m) {
  const int n = alg.dim();
  const Eigen::MatrixXd minv = m.inverse();
  BilinearMap c(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Eigen::VectorXd w = minv * alg.bracket(m.col(a), m.col(b));
      for (int k = 0; k < n; ++k) c.set(k, a, b, w(k));
    }
  }
  return LieAlgebra(c);
}

}  // namespace liestat
