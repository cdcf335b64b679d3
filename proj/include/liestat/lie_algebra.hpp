#pragma once

#include <Eigen/Dense>
#include <vector>

namespace liestat {

/// Bilinear map mu on the frame, stored as one matrix per first slot:
/// mu(e_i, e_j) = sum_k slot(i)(k, j) e_k.  Structure constants, connection
/// coefficients, U-maps and skewness operators all share this layout.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(int dim) : slots_(dim, Eigen::MatrixXd::Zero(dim, dim)) {}

  int dim() const { return static_cast<int>(slots_.size()); }

  Eigen::MatrixXd& slot(int i) { return slots_[i]; }
  const Eigen::MatrixXd& slot(int i) const { return slots_[i]; }

  /// Coefficient of e_k in mu(e_i, e_j).
  double coeff(int k, int i, int j) const { return slots_[i](k, j); }
  void set(int k, int i, int j, double value) { slots_[i](k, j) = value; }

  /// mu(x, y).
  Eigen::VectorXd apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Endomorphism mu(x, .) as a matrix.
  Eigen::MatrixXd contract(const Eigen::VectorXd& x) const;

  double max_abs() const;

  BilinearMap& operator+=(const BilinearMap& other);
  BilinearMap& operator-=(const BilinearMap& other);
  BilinearMap& operator*=(double s);
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
  friend BilinearMap operator*(double s, BilinearMap m) { return m *= s; }

 private:
  std::vector<Eigen::MatrixXd> slots_;
};

/// Max-abs violation of mu(x,y) = -mu(y,x) over basis pairs.
double antisymmetry_defect(const BilinearMap& c);

/// Max-abs of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] over basis
/// triples, for the candidate bracket c.
double jacobi_defect(const BilinearMap& c);

/// Finite-dimensional Lie algebra given by antisymmetric structure constants
/// c^k_{ij}, [e_i,e_j] = sum_k c^k_{ij} e_k.  The constructor validates
/// antisymmetry and the Jacobi identity and rejects invalid input.
class LieAlgebra {
 public:
  explicit LieAlgebra(BilinearMap c, double tol = 1e-9);

  int dim() const { return c_.dim(); }
  const BilinearMap& structure() const { return c_; }

  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Matrix of ad(x) = [x, .].
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const { return c_.contract(x); }
  Eigen::MatrixXd ad(int i) const { return c_.slot(i); }

  double jacobi_defect() const { return liestat::jacobi_defect(c_); }

 private:
  BilinearMap c_;
};

struct UnimodularKernel {
  bool is_unimodular = false;
  std::vector<Eigen::VectorXd> basis;  // kernel of X -> tr ad(X)
};

UnimodularKernel unimodular_kernel(const LieAlgebra& alg, double tol = 1e-9);

/// Pull the bracket through the frame change f_a = sum_i M(i,a) e_i.
LieAlgebra change_frame(const LieAlgebra& alg, const Eigen::MatrixXd& m);

}  // namespace liestat
