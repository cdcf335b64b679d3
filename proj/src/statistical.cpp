#include "liestat/statistical.hpp"

#include <cmath>
#include <string>

#include "liestat/errors.hpp"

namespace liestat {

StatisticalStructure::StatisticalStructure(LieAlgebra alg, InnerProduct ip, CubicForm cubic)
    : alg_(std::move(alg)),
      ip_(std::move(ip)),
      cubic_(std::move(cubic)),
      skewness_(skewness_from_cubic(ip_, cubic_)),
      levi_civita_(liestat::levi_civita(alg_, ip_)) {
  if (ip_.dim() != alg_.dim() || cubic_.dim() != alg_.dim())
    throw ValidationError("statistical structure: dimension mismatch");
}

Connection statistical_connection(const StatisticalStructure& stat, double alpha) {
  BilinearMap gamma = stat.levi_civita().gamma();
  gamma -= (alpha / 2.0) * stat.skewness().map();
  return Connection(std::move(gamma));
}

Connection dual_connection(const InnerProduct& ip, const Connection& conn) {
  const int n = conn.dim();
  BilinearMap dual(n);
  for (int i = 0; i < n; ++i)
    dual.slot(i) = -ip.solve(conn.op(i).transpose() * ip.gram());
  return Connection(std::move(dual));
}

StatisticalCheck is_statistical(const LieAlgebra& alg, const InnerProduct& ip,
                                const Connection& conn, double tol) {
  const int n = alg.dim();
  double defect = torsion_defect(alg, conn);
  // C(e_i, e_j, e_k) = -<Gamma_i e_j, e_k> - <e_j, Gamma_i e_k>
  std::vector<Eigen::MatrixXd> c(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd m = conn.op(i).transpose() * ip.gram();
    c[i] = -m - m.transpose();
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        defect = std::max(defect, std::abs(c[i](j, k) - c[j](i, k)));
  return {defect <= tol, defect};
}

std::vector<BilinearMap> covariant_derivative(const Connection& conn, const BilinearMap& b) {
  const int n = conn.dim();
  std::vector<BilinearMap> d(n, BilinearMap(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXd m = conn.op(i) * b.slot(j) - b.slot(j) * conn.op(i);
      for (int s = 0; s < n; ++s) m -= conn.op(i)(s, j) * b.slot(s);
      d[i].slot(j) = m;
    }
  }
  return d;
}

double conjugate_symmetry_defect(const StatisticalStructure& stat) {
  const auto d = covariant_derivative(stat.levi_civita(), stat.skewness().map());
  const int n = stat.algebra().dim();
  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      defect = std::max(defect, (d[i].slot(j) - d[j].slot(i)).cwiseAbs().maxCoeff());
  return defect;
}

CurvaturePair curvature_pair(const StatisticalStructure& stat, double alpha) {
  return {curvature(stat.algebra(), statistical_connection(stat, alpha)),
          curvature(stat.algebra(), statistical_connection(stat, -alpha))};
}

CurvatureTensor statistical_curvature(const StatisticalStructure& stat, double alpha) {
  CurvaturePair pair = curvature_pair(stat, alpha);
  pair.r += pair.r_dual;
  pair.r *= 0.5;
  return pair.r;
}

ConstantCurvatureFit constant_curvature_fit(const StatisticalStructure& stat, double alpha) {
  const CurvatureTensor r =
      curvature(stat.algebra(), statistical_connection(stat, alpha));
  const CurvatureTensor w = wedge_tensor(stat.metric());
  const int n = r.dim();
  double rw = 0.0, ww = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rw += (r.op(i, j).array() * w.op(i, j).array()).sum();
      ww += w.op(i, j).squaredNorm();
    }
  ConstantCurvatureFit fit;
  fit.k = rw / ww;
  fit.residual = (r - fit.k * w).max_abs();
  return fit;
}

Apolarity apolarity(const StatisticalStructure& stat) {
  const int n = stat.algebra().dim();
  Apolarity out;
  out.tau = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) out.tau(i) = -0.5 * stat.skewness().op(i).trace();
  out.e = stat.metric().solve(out.tau);
  return out;
}

Eigen::VectorXd identity_tension(const StatisticalStructure& stat) {
  const int n = stat.algebra().dim();
  const Eigen::MatrixXd ginv = stat.metric().solve(Eigen::MatrixXd::Identity(n, n));
  Eigen::VectorXd trace = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) trace += ginv(j, k) * stat.skewness().op(j).col(k);
  return -2.0 * trace;
}

HessianCurvature hessian_curvature(const StatisticalStructure& stat, double flat_tol) {
  const Connection nabla = statistical_connection(stat, 1.0);
  const double flat_defect = curvature(stat.algebra(), nabla).max_abs();
  if (flat_defect > flat_tol)
    throw ValidationError("hessian curvature: connection is not flat, curvature defect " +
                          std::to_string(flat_defect));
  HessianCurvature h;
  h.h = covariant_derivative(nabla, stat.skewness().map());
  for (auto& b : h.h) b *= 0.5;
  return h;
}

double codazzi_defect(const LieAlgebra& alg, const InnerProduct& ip, const Eigen::MatrixXd& h) {
  const int n = alg.dim();
  const Connection lc = levi_civita(alg, ip);
  // (nabla_{e_i} h)(e_j, e_k) = -h(Gamma_i e_j, e_k) - h(e_j, Gamma_i e_k)
  std::vector<Eigen::MatrixXd> d(n);
  for (int i = 0; i < n; ++i)
    d[i] = -(lc.op(i).transpose() * h) - h * lc.op(i);
  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      defect = std::max(defect, (d[i].row(j) - d[j].row(i)).cwiseAbs().maxCoeff());
  return defect;
}

bool essential_check(const LieAlgebra& alg, const InnerProduct& ip, const Eigen::MatrixXd& h,
                     double tol) {
  const int n = alg.dim();
  const Connection lc = levi_civita(alg, ip);
  double parallel = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd d = -(lc.op(i).transpose() * h) - h * lc.op(i);
    parallel = std::max(parallel, d.cwiseAbs().maxCoeff());
  }
  if (parallel <= tol) return false;  // h is parallel

  // eigenspaces of h^sharp: generalized problem h v = lambda G v
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(h, ip.gram());
  const Eigen::VectorXd evals = es.eigenvalues();
  const Eigen::MatrixXd evecs = es.eigenvectors();
  const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());

  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && std::abs(evals(stop) - evals(start)) <= 1e-8 * scale) ++stop;
    const Eigen::MatrixXd basis = evecs.middleCols(start, stop - start);
    // ideal test: [g, V] subset V
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
    bool ideal = true;
    for (int i = 0; i < n && ideal; ++i)
      for (int c = 0; c < basis.cols() && ideal; ++c) {
        const Eigen::VectorXd b =
            alg.bracket(Eigen::VectorXd::Unit(n, i), basis.col(c));
        const Eigen::VectorXd res = b - basis * qr.solve(b);
        if (res.cwiseAbs().maxCoeff() > tol) ideal = false;
      }
    if (ideal) return false;  // an eigenspace is an ideal
    start = stop;
  }
  return true;
}

}  // namespace liestat
