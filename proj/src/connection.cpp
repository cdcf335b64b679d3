#include "liestat/connection.hpp"

#include <cmath>

#include "liestat/errors.hpp"

namespace liestat {

BilinearMap u_map(const LieAlgebra& alg, const InnerProduct& ip) {
  const int n = alg.dim();
  const Eigen::MatrixXd& g = ip.gram();
  BilinearMap u(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd rhs(n);
      for (int k = 0; k < n; ++k)
        rhs(k) = (g * alg.ad(k).col(j))(i) + (g * alg.ad(k).col(i))(j);
      const Eigen::VectorXd uij = 0.5 * ip.solve(rhs);
      for (int k = 0; k < n; ++k) u.set(k, i, j, uij(k));
    }
  }
  return u;
}

Connection levi_civita(const LieAlgebra& alg, const InnerProduct& ip) {
  BilinearMap gamma = u_map(alg, ip);
  const BilinearMap& c = alg.structure();
  for (int i = 0; i < alg.dim(); ++i) gamma.slot(i) += 0.5 * c.slot(i);
  return Connection(std::move(gamma));
}

Connection cartan_schouten(const LieAlgebra& alg, double t) {
  BilinearMap gamma = alg.structure();
  gamma *= 0.5 * (1.0 + t);
  return Connection(std::move(gamma));
}

BilinearMap torsion(const LieAlgebra& alg, const Connection& conn) {
  const int n = alg.dim();
  BilinearMap t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.set(k, i, j, -alg.structure().coeff(k, i, j) + conn.gamma().coeff(k, i, j) -
                           conn.gamma().coeff(k, j, i));
  return t;
}

double torsion_defect(const LieAlgebra& alg, const Connection& conn) {
  return torsion(alg, conn).max_abs();
}

Eigen::MatrixXd CurvatureTensor::op(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out += x(i) * y(j) * op(i, j);
  return out;
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (const auto& o : ops_) m = std::max(m, o.cwiseAbs().maxCoeff());
  return m;
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& other) {
  for (size_t i = 0; i < ops_.size(); ++i) ops_[i] += other.ops_[i];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator-=(const CurvatureTensor& other) {
  for (size_t i = 0; i < ops_.size(); ++i) ops_[i] -= other.ops_[i];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator*=(double s) {
  for (auto& o : ops_) o *= s;
  return *this;
}

CurvatureTensor curvature(const LieAlgebra& alg, const Connection& conn) {
  const int n = alg.dim();
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXd f = conn.op(i) * conn.op(j) - conn.op(j) * conn.op(i);
      for (int m = 0; m < n; ++m) f -= alg.structure().coeff(m, i, j) * conn.op(m);
      r.op(i, j) = f;
    }
  }
  return r;
}

Eigen::MatrixXd ricci(const LieAlgebra& alg, const Connection& conn) {
  const int n = alg.dim();
  const CurvatureTensor r = curvature(alg, conn);
  Eigen::MatrixXd ric(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.op(i, j)(i, k);
      ric(j, k) = s;
    }
  return ric;
}

double scalar_curvature(const LieAlgebra& alg, const InnerProduct& ip, const Connection& conn) {
  return ip.solve(ricci(alg, conn)).trace();
}

double sectional_curvature(const InnerProduct& ip, const CurvatureTensor& curv,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const double gxx = ip.pairing(x, x);
  const double gyy = ip.pairing(y, y);
  const double gxy = ip.pairing(x, y);
  const double denom = gxx * gyy - gxy * gxy;
  if (denom <= 1e-12)
    throw ValidationError("sectional curvature: plane is degenerate");
  return ip.pairing(curv.op(x, y) * y, x) / denom;
}

CurvatureTensor wedge_tensor(const InnerProduct& ip) {
  const int n = ip.dim();
  CurvatureTensor w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // (e_i wedge_g e_j)e_k = g(e_j,e_k) e_i - g(e_k,e_i) e_j
        w.op(i, j).col(k) += ip.gram()(j, k) * Eigen::VectorXd::Unit(n, i);
        w.op(i, j).col(k) -= ip.gram()(k, i) * Eigen::VectorXd::Unit(n, j);
      }
  return w;
}

}  // namespace liestat
