#pragma once

#include <Eigen/Dense>
#include <vector>

#include "liestat/inner_product.hpp"
#include "liestat/lie_algebra.hpp"

namespace liestat {

/// Left-invariant connection: Gamma^k_{ij} = coefficient of e_k in
/// nabla_{e_i} e_j, i.e. the bilinear map mu of the connection.
class Connection {
 public:
  Connection() = default;
  explicit Connection(BilinearMap gamma) : gamma_(std::move(gamma)) {}

  int dim() const { return gamma_.dim(); }
  const BilinearMap& gamma() const { return gamma_; }

  /// Endomorphism nabla_{e_i}.
  const Eigen::MatrixXd& op(int i) const { return gamma_.slot(i); }
  Eigen::MatrixXd op(const Eigen::VectorXd& x) const { return gamma_.contract(x); }

  Eigen::VectorXd derive(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return gamma_.apply(x, y);
  }

 private:
  BilinearMap gamma_;
};

/// Symmetric bilinear map U with 2<U(X,Y),Z> = <X,[Z,Y]> + <Y,[Z,X]>.
BilinearMap u_map(const LieAlgebra& alg, const InnerProduct& ip);

/// nabla^g_X Y = (1/2)[X,Y] + U(X,Y).
Connection levi_civita(const LieAlgebra& alg, const InnerProduct& ip);

/// One-parameter family mu = (1/2)(1+t)[X,Y]; t = -1, 0, 1 give the
/// canonical, neutral and anti-canonical connections.
Connection cartan_schouten(const LieAlgebra& alg, double t);

/// T^k_{ij} of T(X,Y) = -[X,Y] + mu(X,Y) - mu(Y,X).
BilinearMap torsion(const LieAlgebra& alg, const Connection& conn);

double torsion_defect(const LieAlgebra& alg, const Connection& conn);

/// R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]}, stored as the endomorphism
/// R(e_i,e_j) per frame pair; R^l_{kij} = op(i,j)(l,k).
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int dim)
      : dim_(dim), ops_(dim * dim, Eigen::MatrixXd::Zero(dim, dim)) {}

  int dim() const { return dim_; }
  Eigen::MatrixXd& op(int i, int j) { return ops_[i * dim_ + j]; }
  const Eigen::MatrixXd& op(int i, int j) const { return ops_[i * dim_ + j]; }

  double coeff(int l, int k, int i, int j) const { return op(i, j)(l, k); }

  /// R(x, y) for arbitrary frame vectors.
  Eigen::MatrixXd op(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  double max_abs() const;

  CurvatureTensor& operator+=(const CurvatureTensor& other);
  CurvatureTensor& operator-=(const CurvatureTensor& other);
  CurvatureTensor& operator*=(double s);
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(double s, CurvatureTensor m) { return m *= s; }

 private:
  int dim_ = 0;
  std::vector<Eigen::MatrixXd> ops_;
};

CurvatureTensor curvature(const LieAlgebra& alg, const Connection& conn);

/// Ric(Y,Z) = trace of X -> R(X,Y)Z; may be asymmetric for non-metric
/// connections.
Eigen::MatrixXd ricci(const LieAlgebra& alg, const Connection& conn);

double scalar_curvature(const LieAlgebra& alg, const InnerProduct& ip, const Connection& conn);

/// g(R(X,Y)Y,X) / (g(X,X)g(Y,Y) - g(X,Y)^2).  The caller is responsible for
/// passing a curvature tensor for which the quotient is frame-independent.
double sectional_curvature(const InnerProduct& ip, const CurvatureTensor& curv,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// k (g(Y,Z)X - g(Z,X)Y): the constant-curvature comparison tensor.
CurvatureTensor wedge_tensor(const InnerProduct& ip);

}  // namespace liestat
