#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "liestat/cubic_form.hpp"
#include "liestat/inner_product.hpp"
#include "liestat/lie_algebra.hpp"

namespace liestat {

/// Linear system whose kernel, over the canonical cubic-form components, is
/// the space of conjugate-symmetric cubic forms for (alg, ip).  One row per
/// (unordered frame pair, direction k, component l) of the antisymmetrized
/// covariant derivative of K.
struct ConstraintSystem {
  int dim = 0;
  Eigen::MatrixXd matrix;  // rows x component_count(dim)
};

ConstraintSystem build_system(const LieAlgebra& alg, const InnerProduct& ip);

struct SolutionSpace {
  int dim = 0;
  std::vector<CubicForm> basis;  // reduced echelon over canonical components,
                                 // leading entries +1
  double rank_threshold = 0.0;
  bool rank_ambiguous = false;   // a singular value fell within 10x of the threshold
};

/// Null space by SVD; threshold = tol x max(sigma_max, 1) with tol = 1e-9
/// unless overridden by LIESTAT_RANK_TOL.
SolutionSpace kernel(const ConstraintSystem& system);

struct Containment {
  bool contained = false;
  double distance = 0.0;  // orthogonal distance to span(basis)
};

Containment contains(const SolutionSpace& space, const CubicForm& cubic, double tol = 1e-8);

struct Classification {
  SolutionSpace space;
  std::string label;
};

Classification classify_unimodular(double c1, double c2, double c3);
Classification classify_nonunimodular(double xi, double eta);

/// Class label for an arbitrary algebra: for 3D, the Milnor signature label
/// (unimodular) or the normalized invariant D = 4 det A / (tr A)^2 of the
/// adjoint action on the unimodular kernel; "r2"/"ga1" in 2D.
std::string algebra_class_label(const LieAlgebra& alg, const InnerProduct& ip);

/// Kernel for product_g2d_r(nu2) with the orthonormal metric.
Classification classify_product(double nu2);

struct SweepRow {
  std::vector<double> params;
  int dim = -1;
  std::string label;
  std::string error;  // nonempty when the grid point failed validation
};

/// Families "milnor" (3 axes) and "nonuni" (2 axes); rows in lexicographic
/// grid order.
std::vector<SweepRow> sweep(const std::string& family,
                            const std::vector<std::vector<double>>& axes);

}  // namespace liestat
