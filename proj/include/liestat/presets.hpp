#pragma once

#include <string>
#include <vector>

#include "liestat/lie_algebra.hpp"

namespace liestat {

/// Diagonal structure constants of a 3D unimodular frame:
/// [e2,e3] = c1 e1, [e3,e1] = c2 e2, [e1,e2] = c3 e3.
struct MilnorFrameSpec {
  double c1 = 0, c2 = 0, c3 = 0;
  LieAlgebra algebra() const;
};

/// Normalized non-unimodular frame (tr A = 2):
/// [e1,e2] = (1+xi)(e2 + eta e3), [e2,e3] = 0, [e3,e1] = (1-xi)(eta e2 - e3).
struct NonUnimodularSpec {
  double xi = 0, eta = 0;  // both >= 0
  LieAlgebra algebra() const;
};

/// Named frame catalog.  Families: milnor(c1,c2,c3), nonuni(xi,eta),
/// g2d(nu2), product_g2d_r(nu2), sasaki_g(c), r3, plus fixed aliases
/// su2, sl2r, e2, e11, nil3, heisenberg.
LieAlgebra preset(const std::string& name, const std::vector<double>& params = {});

/// Unimodular class by the signature of (c1,c2,c3): su2/sl2r/e2/e11/nil3/r3.
std::string milnor_class_label(double c1, double c2, double c3, double tol = 1e-12);

/// Milnor invariant D = det A = (1-xi^2)(1+eta^2) of nonuni(xi,eta).
double milnor_invariant(double xi, double eta);

}  // namespace liestat
