#pragma once

#include <Eigen/Dense>
#include <vector>

#include "liestat/connection.hpp"
#include "liestat/cubic_form.hpp"
#include "liestat/inner_product.hpp"
#include "liestat/lie_algebra.hpp"

namespace liestat {

/// Left-invariant statistical structure (g, nabla) presented by its cubic
/// form; nabla = nabla^g - K/2 with g(K(X)Y,Z) = C(X,Y,Z).
class StatisticalStructure {
 public:
  StatisticalStructure(LieAlgebra alg, InnerProduct ip, CubicForm cubic);

  const LieAlgebra& algebra() const { return alg_; }
  const InnerProduct& metric() const { return ip_; }
  const CubicForm& cubic() const { return cubic_; }
  const SkewnessOperator& skewness() const { return skewness_; }
  const Connection& levi_civita() const { return levi_civita_; }

  StatisticalStructure with_cubic(CubicForm cubic) const {
    return StatisticalStructure(alg_, ip_, std::move(cubic));
  }

 private:
  LieAlgebra alg_;
  InnerProduct ip_;
  CubicForm cubic_;
  SkewnessOperator skewness_;
  Connection levi_civita_;
};

/// nabla^(alpha) = nabla^g - (alpha/2) K; alpha = 1, -1, 0 give nabla,
/// nabla^* and nabla^g.
Connection statistical_connection(const StatisticalStructure& stat, double alpha);

/// Solves g(nabla_X Y, Z) + g(Y, dual_X Z) = X g(Y,Z) (= 0 in an invariant
/// frame) for the conjugate connection.
Connection dual_connection(const InnerProduct& ip, const Connection& conn);

struct StatisticalCheck {
  bool is_statistical = false;
  double defect = 0.0;  // max of torsion defect and nabla-g asymmetry
};

/// True iff conn is torsion-free and nabla g is totally symmetric.
StatisticalCheck is_statistical(const LieAlgebra& alg, const InnerProduct& ip,
                                const Connection& conn, double tol = 1e-9);

/// (nabla_X B)(Y,Z) of a (1,2)-tensor B; index layout [i] -> bilinear (j,k).
std::vector<BilinearMap> covariant_derivative(const Connection& conn, const BilinearMap& b);

/// Max-abs asymmetry in (i,j) of (nabla^g_{e_i} K)(e_j, e_k); zero iff the
/// structure is conjugate symmetric.
double conjugate_symmetry_defect(const StatisticalStructure& stat);

struct CurvaturePair {
  CurvatureTensor r;       // curvature of nabla^(alpha)
  CurvatureTensor r_dual;  // curvature of nabla^(-alpha)
};

CurvaturePair curvature_pair(const StatisticalStructure& stat, double alpha);

/// R^S = (R + R^*)/2 for the alpha-connection pair.
CurvatureTensor statistical_curvature(const StatisticalStructure& stat, double alpha);

struct ConstantCurvatureFit {
  double k = 0.0;         // least-squares constant in R = k (g wedge g)
  double residual = 0.0;  // max-abs of R - k (g wedge g)
};

ConstantCurvatureFit constant_curvature_fit(const StatisticalStructure& stat, double alpha);

struct Apolarity {
  Eigen::VectorXd tau;  // tau(e_i) = -(1/2) tr K(e_i)
  Eigen::VectorXd e;    // metric dual, E = -(1/2) tr_g K
};

Apolarity apolarity(const StatisticalStructure& stat);

/// tau(id) = -2 tr_g K, the tension of the identity map.
Eigen::VectorXd identity_tension(const StatisticalStructure& stat);

/// H(X,Y)Z = (1/2)(nabla_X K)(Y,Z) with nabla the alpha = 1 connection.
struct HessianCurvature {
  std::vector<BilinearMap> h;  // h[i] slot j column k
  double coeff(int l, int i, int j, int k) const { return h[i].coeff(l, j, k); }
};

/// Requires the alpha = 1 connection to be flat within flat_tol.
HessianCurvature hessian_curvature(const StatisticalStructure& stat, double flat_tol = 1e-9);

/// Max asymmetry of nabla^g h for a symmetric (0,2)-tensor h.
double codazzi_defect(const LieAlgebra& alg, const InnerProduct& ip, const Eigen::MatrixXd& h);

/// Essential iff nabla^g h != 0 and no eigenspace of the metric dual h^sharp
/// is a bracket-closed ideal.
bool essential_check(const LieAlgebra& alg, const InnerProduct& ip, const Eigen::MatrixXd& h,
                     double tol = 1e-9);

}  // namespace liestat
