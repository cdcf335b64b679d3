#include "liestat/presets.hpp"

#include <cmath>

#include "liestat/errors.hpp"

namespace liestat {

namespace {

void set_bracket(BilinearMap& c, int i, int j, const Eigen::VectorXd& v) {
  for (int k = 0; k < c.dim(); ++k) {
    c.set(k, i, j, v(k));
    c.set(k, j, i, -v(k));
  }
}

Eigen::VectorXd e(int n, int i) { return Eigen::VectorXd::Unit(n, i); }

void require_params(const std::string& name, const std::vector<double>& params, size_t n) {
  if (params.size() != n)
    throw ParseError("preset " + name + ": expected " + std::to_string(n) +
                     " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

LieAlgebra MilnorFrameSpec::algebra() const {
  BilinearMap c(3);
  set_bracket(c, 1, 2, c1 * e(3, 0));
  set_bracket(c, 2, 0, c2 * e(3, 1));
  set_bracket(c, 0, 1, c3 * e(3, 2));
  return LieAlgebra(c);
}

LieAlgebra NonUnimodularSpec::algebra() const {
  if (xi < 0 || eta < 0)
    throw ValidationError("nonuni: structure constants must satisfy xi >= 0, eta >= 0");
  BilinearMap c(3);
  set_bracket(c, 0, 1, (1 + xi) * (e(3, 1) + eta * e(3, 2)));
  set_bracket(c, 2, 0, (1 - xi) * (eta * e(3, 1) - e(3, 2)));
  return LieAlgebra(c);
}

LieAlgebra preset(const std::string& name, const std::vector<double>& params) {
  if (name == "milnor") {
    require_params(name, params, 3);
    return MilnorFrameSpec{params[0], params[1], params[2]}.algebra();
  }
  if (name == "nonuni") {
    require_params(name, params, 2);
    return NonUnimodularSpec{params[0], params[1]}.algebra();
  }
  if (name == "g2d") {
    require_params(name, params, 1);
    const double nu2 = params[0];
    if (nu2 <= 0) throw ValidationError("preset g2d: nu2 must be positive");
    BilinearMap c(2);
    c.set(0, 0, 1, -1.0 / nu2);
    c.set(0, 1, 0, 1.0 / nu2);
    return LieAlgebra(c);
  }
  if (name == "product_g2d_r") {
    require_params(name, params, 1);
    const double nu2 = params[0];
    if (nu2 <= 0) throw ValidationError("preset product_g2d_r: nu2 must be positive");
    BilinearMap c(3);
    set_bracket(c, 2, 0, -(1.0 / nu2) * e(3, 2));
    return LieAlgebra(c);
  }
  if (name == "sasaki_g") {
    require_params(name, params, 1);
    const double h = (params[0] + 3.0) / 2.0;
    return MilnorFrameSpec{h, h, 2.0}.algebra();
  }
  if (name == "r3") {
    require_params(name, params, 0);
    return LieAlgebra(BilinearMap(3));
  }
  if (name == "su2") return MilnorFrameSpec{1, 1, 1}.algebra();
  if (name == "sl2r") return MilnorFrameSpec{1, 1, -1}.algebra();
  if (name == "e2") return MilnorFrameSpec{0, 1, 1}.algebra();
  if (name == "e11") return MilnorFrameSpec{0, 1, -1}.algebra();
  if (name == "nil3" || name == "heisenberg") return MilnorFrameSpec{1, 0, 0}.algebra();
  throw ParseError("unknown preset: " + name);
}

std::string milnor_class_label(double c1, double c2, double c3, double tol) {
  int pos = 0, neg = 0, zero = 0;
  for (double c : {c1, c2, c3}) {
    if (std::abs(c) <= tol)
      ++zero;
    else if (c > 0)
      ++pos;
    else
      ++neg;
  }
  if (neg > pos) std::swap(pos, neg);  // flipping two basis signs mirrors the signature
  if (zero == 3) return "r3";
  if (zero == 2) return "nil3";
  if (zero == 1) return neg == 0 ? "e2" : "e11";
  return neg == 0 ? "su2" : "sl2r";
}

double milnor_invariant(double xi, double eta) { return (1 - xi * xi) * (1 + eta * eta); }

}  // namespace liestat
