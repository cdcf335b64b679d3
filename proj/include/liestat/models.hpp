#pragma once

#include <Eigen/Dense>

#include "liestat/statistical.hpp"

namespace liestat {

/// Normal family N(mu, sigma) with Fisher metric (dmu^2 + 2 dsigma^2)/sigma^2,
/// identified with the solvable group frame g2d(sqrt(2)).
struct NormalModel {};

/// Student-t family with nu degrees of freedom.  nu is accepted as any
/// positive real; the geometry formulas are smooth in nu.
struct TModel {
  double nu = 0;
};

struct FrameScales {
  double nu1 = 0, nu2 = 0;
};

FrameScales frame_scales(const NormalModel&);
FrameScales frame_scales(const TModel& model);

StatisticalStructure normal_structure();
StatisticalStructure t_structure(double nu);

/// Closed-form constant k with R^(alpha) = k (g wedge g) on the t model.
double t_curvature_constant(double nu, double alpha);

/// alpha at which the t-model alpha-connection is flat: (nu+5)/(nu-1).
double flat_alpha(double nu);

/// Degrees of freedom of the t-distribution matching a q-normal, 1 < q < 3.
double q_to_nu(double q);

/// Coordinate Gram matrix (nu1^2 dx^2 + nu2^2 dy^2)/y^2 at (x, y), y > 0.
Eigen::Matrix2d coordinate_metric(const NormalModel&, double x, double y);
Eigen::Matrix2d coordinate_metric(const TModel& model, double x, double y);

}  // namespace liestat
