#include "liestat/classify.hpp"

#include <cmath>
#include <cstdlib>

#include "liestat/connection.hpp"
#include "liestat/errors.hpp"
#include "liestat/presets.hpp"
#include "liestat/statistical.hpp"

namespace liestat {

namespace {

double rank_tolerance() {
  if (const char* env = std::getenv("LIESTAT_RANK_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e-9;
}

/// Reduced row echelon form with leading entries +1; rows ordered by pivot
/// column.  Entries below pivot_tol are treated as zero.
Eigen::MatrixXd reduced_echelon(Eigen::MatrixXd m, double pivot_tol) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int best = -1;
    double best_abs = pivot_tol;
    for (int r = pivot_row; r < rows; ++r)
      if (std::abs(m(r, col)) > best_abs) {
        best = r;
        best_abs = std::abs(m(r, col));
      }
    if (best < 0) continue;
    m.row(best).swap(m.row(pivot_row));
    m.row(pivot_row) /= m(pivot_row, col);
    for (int r = 0; r < rows; ++r)
      if (r != pivot_row) m.row(r) -= m(r, col) * m.row(pivot_row);
    ++pivot_row;
  }
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (std::abs(m(r, c)) < pivot_tol) m(r, c) = 0.0;
  return m;
}

Classification classify_algebra(const LieAlgebra& alg, std::string label) {
  const InnerProduct ip = InnerProduct::orthonormal(alg.dim());
  SolutionSpace space = kernel(build_system(alg, ip));
  return {std::move(space), std::move(label)};
}

}  // namespace

std::string algebra_class_label(const LieAlgebra& alg, const InnerProduct& ip) {
  const int n = alg.dim();
  if (n == 2)
    return alg.structure().max_abs() <= 1e-12 ? "r2" : "ga1";
  if (n != 3) return "unclassified";

  // orthonormalize the frame so the Milnor normal forms apply
  const Eigen::MatrixXd r = ip.gram().llt().matrixU();
  const LieAlgebra on = change_frame(alg, r.inverse());

  const UnimodularKernel uk = unimodular_kernel(on);
  if (uk.is_unimodular) {
    // [x, y] = L (x cross y); L is symmetric precisely in the unimodular
    // case and its eigenvalues are the diagonal Milnor constants
    Eigen::Matrix3d l = Eigen::Matrix3d::Zero();
    const int eps[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < 3; ++m)
        l(k, m) = on.structure().coeff(k, eps[m][0], eps[m][1]);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (l + l.transpose()));
    const Eigen::Vector3d c = es.eigenvalues();
    return milnor_class_label(c(0), c(1), c(2), 1e-9 * std::max(1.0, c.cwiseAbs().maxCoeff()));
  }

  // non-unimodular: D = 4 det A / (tr A)^2 with A = ad(b) restricted to the
  // kernel, independent of the choice of complement direction b
  Eigen::MatrixXd u(3, 2);
  u.col(0) = uk.basis[0].normalized();
  u.col(1) = (uk.basis[1] - uk.basis[1].dot(u.col(0)) * u.col(0)).normalized();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(3);
  for (int i = 0; i < 3; ++i) {
    Eigen::VectorXd cand = Eigen::VectorXd::Unit(3, i);
    cand -= u * (u.transpose() * cand);
    if (cand.norm() > b.norm()) b = cand;
  }
  b.normalize();
  Eigen::Matrix2d a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = u.col(i).dot(on.bracket(b, u.col(j)));
  const double trace = a.trace();
  char label[64];
  std::snprintf(label, sizeof label, "D=%.12g", 4 * a.determinant() / (trace * trace));
  return label;
}

ConstraintSystem build_system(const LieAlgebra& alg, const InnerProduct& ip) {
  const int n = alg.dim();
  const int ncomp = CubicForm::component_count(n);
  const int nrows = n * n * (n * (n - 1) / 2);
  const Connection lc = levi_civita(alg, ip);

  ConstraintSystem sys;
  sys.dim = n;
  sys.matrix = Eigen::MatrixXd::Zero(nrows, ncomp);
  for (int c = 0; c < ncomp; ++c) {
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(ncomp);
    unit(c) = 1.0;
    const SkewnessOperator k = skewness_from_cubic(ip, CubicForm::from_components(n, unit));
    const auto d = covariant_derivative(lc, k.map());
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Eigen::MatrixXd asym = d[i].slot(j) - d[j].slot(i);
        for (int kk = 0; kk < n; ++kk)
          for (int l = 0; l < n; ++l) sys.matrix(row++, c) = asym(l, kk);
      }
  }
  return sys;
}

SolutionSpace kernel(const ConstraintSystem& system) {
  const int ncomp = static_cast<int>(system.matrix.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system.matrix, Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double sigma_max = sigma.size() ? sigma(0) : 0.0;

  SolutionSpace out;
  out.rank_threshold = rank_tolerance() * std::max(sigma_max, 1.0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > out.rank_threshold) ++rank;
    if (sigma(i) > out.rank_threshold && sigma(i) <= 10.0 * out.rank_threshold)
      out.rank_ambiguous = true;
    if (sigma(i) <= out.rank_threshold && sigma(i) > 0.1 * out.rank_threshold)
      out.rank_ambiguous = true;
  }
  out.dim = ncomp - rank;
  if (out.dim == 0) return out;

  const Eigen::MatrixXd null_basis =
      svd.matrixV().rightCols(out.dim).transpose();  // rows span the kernel
  const Eigen::MatrixXd echelon = reduced_echelon(null_basis, 1e-10);
  for (int r = 0; r < echelon.rows(); ++r)
    out.basis.push_back(CubicForm::from_components(system.dim, echelon.row(r).transpose()));
  return out;
}

Containment contains(const SolutionSpace& space, const CubicForm& cubic, double tol) {
  Containment out;
  if (space.basis.empty()) {
    out.distance = cubic.norm();
    out.contained = out.distance <= tol * cubic.norm();
    return out;
  }
  const int ncomp = static_cast<int>(cubic.components().size());
  Eigen::MatrixXd b(ncomp, space.basis.size());
  for (size_t c = 0; c < space.basis.size(); ++c) b.col(c) = space.basis[c].components();
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b);
  const Eigen::VectorXd residual = cubic.components() - b * qr.solve(cubic.components());
  out.distance = residual.norm();
  out.contained = out.distance <= tol * cubic.norm();
  return out;
}

Classification classify_unimodular(double c1, double c2, double c3) {
  return classify_algebra(MilnorFrameSpec{c1, c2, c3}.algebra(), milnor_class_label(c1, c2, c3));
}

Classification classify_nonunimodular(double xi, double eta) {
  char label[64];
  std::snprintf(label, sizeof label, "D=%.12g", milnor_invariant(xi, eta));
  return classify_algebra(NonUnimodularSpec{xi, eta}.algebra(), label);
}

Classification classify_product(double nu2) {
  char label[64];
  std::snprintf(label, sizeof label, "h2xr(nu2=%.12g)", nu2);
  return classify_algebra(preset("product_g2d_r", {nu2}), label);
}

std::vector<SweepRow> sweep(const std::string& family,
                            const std::vector<std::vector<double>>& axes) {
  const size_t arity = family == "milnor" ? 3 : family == "nonuni" ? 2 : 0;
  if (arity == 0) throw ValidationError("sweep: unknown family " + family);
  if (axes.size() != arity)
    throw ValidationError("sweep: family " + family + " needs " + std::to_string(arity) +
                          " axis ranges");
  for (const auto& a : axes)
    if (a.empty()) throw ValidationError("sweep: empty grid");

  std::vector<SweepRow> rows;
  std::vector<size_t> idx(arity, 0);
  while (true) {
    SweepRow row;
    for (size_t a = 0; a < arity; ++a) row.params.push_back(axes[a][idx[a]]);
    try {
      Classification c = family == "milnor"
                             ? classify_unimodular(row.params[0], row.params[1], row.params[2])
                             : classify_nonunimodular(row.params[0], row.params[1]);
      row.dim = c.space.dim;
      row.label = c.label;
    } catch (const std::exception& err) {
      row.error = err.what();
    }
    rows.push_back(std::move(row));
    size_t a = arity;
    while (a > 0) {
      --a;
      if (++idx[a] < axes[a].size()) break;
      idx[a] = 0;
      if (a == 0) return rows;
    }
  }
}

}  // namespace liestat
