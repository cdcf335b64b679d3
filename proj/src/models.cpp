#include "liestat/models.hpp"

#include <cmath>

#include "liestat/errors.hpp"
#include "liestat/presets.hpp"

namespace liestat {

namespace {

StatisticalStructure solvable_structure(double nu2, double kappa) {
  // frame skewness of the 2D solvable family: K(e1)e1 = kappa e2,
  // K(e1)e2 = kappa e1, K(e2)e2 = 2 kappa e2
  CubicForm cubic(2);
  cubic.set(0, 0, 1, kappa);
  cubic.set(1, 1, 1, 2.0 * kappa);
  return StatisticalStructure(preset("g2d", {nu2}), InnerProduct::orthonormal(2),
                              std::move(cubic));
}

Eigen::Matrix2d coordinate_metric(const FrameScales& s, double y) {
  if (y <= 0) throw ValidationError("coordinate metric: y must be positive");
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  g(0, 0) = s.nu1 * s.nu1 / (y * y);
  g(1, 1) = s.nu2 * s.nu2 / (y * y);
  return g;
}

}  // namespace

FrameScales frame_scales(const NormalModel&) { return {1.0, std::sqrt(2.0)}; }

FrameScales frame_scales(const TModel& model) {
  if (model.nu <= 0) throw ValidationError("t model: nu must be positive");
  return {std::sqrt((model.nu + 1) / (model.nu + 3)),
          std::sqrt(2 * model.nu / (model.nu + 3))};
}

StatisticalStructure normal_structure() {
  return solvable_structure(std::sqrt(2.0), std::sqrt(2.0));
}

StatisticalStructure t_structure(double nu) {
  const FrameScales s = frame_scales(TModel{nu});
  const double kappa = std::sqrt(2 * (nu + 3)) * (nu - 1) / (std::sqrt(nu) * (nu + 5));
  return solvable_structure(s.nu2, kappa);
}

double t_curvature_constant(double nu, double alpha) {
  if (nu <= 0) throw ValidationError("t model: nu must be positive");
  const double a = alpha * (nu - 1) / (nu + 5);
  return (nu + 3) / (2 * nu) * (a + 1) * (a - 1);
}

double flat_alpha(double nu) {
  if (nu == 1) throw ValidationError("flat alpha: undefined at nu = 1");
  return (nu + 5) / (nu - 1);
}

double q_to_nu(double q) {
  if (q <= 1 || q >= 3) throw ValidationError("q to nu: requires 1 < q < 3");
  return (3 - q) / (q - 1);
}

Eigen::Matrix2d coordinate_metric(const NormalModel& m, double /*x*/, double y) {
  return coordinate_metric(frame_scales(m), y);
}

Eigen::Matrix2d coordinate_metric(const TModel& m, double /*x*/, double y) {
  return coordinate_metric(frame_scales(m), y);
}

}  // namespace liestat
