#include "liestat/cubic_form.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "liestat/errors.hpp"

namespace liestat {

CubicForm::CubicForm(int dim) : dim_(dim), comps_(Eigen::VectorXd::Zero(component_count(dim))) {
  if (dim <= 0) throw ValidationError("cubic form: dimension must be positive");
}

const std::vector<std::array<int, 3>>& CubicForm::triples(int dim) {
  static std::map<int, std::vector<std::array<int, 3>>> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) {
    std::vector<std::array<int, 3>> t;
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        for (int k = j; k < dim; ++k) t.push_back({i, j, k});
    it = cache.emplace(dim, std::move(t)).first;
  }
  return it->second;
}

int CubicForm::flat_index(int dim, int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t[0] < 0 || t[2] >= dim) throw ValidationError("cubic form: index out of range");
  const auto& all = triples(dim);
  const auto it = std::lower_bound(all.begin(), all.end(), t);
  return static_cast<int>(it - all.begin());
}

CubicForm CubicForm::from_components(int dim, const Eigen::VectorXd& components) {
  CubicForm c(dim);
  if (components.size() != c.comps_.size())
    throw ValidationError("cubic form: expected " + std::to_string(c.comps_.size()) +
                          " components, got " + std::to_string(components.size()));
  c.comps_ = components;
  return c;
}

CubicForm CubicForm::scaled(double s) const {
  CubicForm out(dim_);
  out.comps_ = s * comps_;
  return out;
}

double SkewnessOperator::symmetry_defect() const {
  double d = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      d = std::max(d, (k_.slot(i).col(j) - k_.slot(j).col(i)).cwiseAbs().maxCoeff());
  return d;
}

double SkewnessOperator::self_adjointness_defect(const InnerProduct& ip) const {
  double d = 0.0;
  for (int i = 0; i < dim(); ++i) {
    const Eigen::MatrixXd gk = ip.gram() * k_.slot(i);
    d = std::max(d, (gk - gk.transpose()).cwiseAbs().maxCoeff());
  }
  return d;
}

SkewnessOperator skewness_from_cubic(const InnerProduct& ip, const CubicForm& cubic) {
  const int n = cubic.dim();
  BilinearMap k(n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd ci(n, n);  // ci(k, j) = C_{ijk}
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) ci(l, j) = cubic(i, j, l);
    k.slot(i) = ip.solve(ci);
  }
  return SkewnessOperator(std::move(k));
}

CubicForm cubic_from_skewness(const InnerProduct& ip, const SkewnessOperator& k, double tol) {
  const int n = k.dim();
  CubicForm c(n);
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd gk = ip.gram() * k.op(i);  // gk(l, j) = C_{ijl}
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double v = gk(l, j);
        const double prev = c(i, j, l);
        if (prev != 0.0) defect = std::max(defect, std::abs(prev - v));
        c.set(i, j, l, v);
      }
  }
  // re-check all permutations against the symmetrized store
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd gk = ip.gram() * k.op(i);
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        defect = std::max(defect, std::abs(gk(l, j) - c(i, j, l)));
  }
  if (defect > tol)
    throw ValidationError("cubic from skewness: induced tensor not totally symmetric, defect " +
                          std::to_string(defect));
  return c;
}

}  // namespace liestat
