#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "liestat/connection.hpp"
#include "liestat/cubic_form.hpp"
#include "liestat/statistical.hpp"

namespace liestat {

/// Almost-contact data (phi, xi, eta) on a 3-dimensional frame, validated
/// against phi^2 = -Id + eta (x) xi, eta(xi) = 1, g(phi., phi.) = g - eta (x) eta.
class SasakianData {
 public:
  SasakianData(const InnerProduct& ip, Eigen::MatrixXd phi, Eigen::VectorXd xi,
               double tol = 1e-10);

  /// phi e1 = e2, phi e2 = -e1, phi e3 = 0, xi = e3.
  static SasakianData canonical(const InnerProduct& ip);

  const Eigen::MatrixXd& phi() const { return phi_; }
  const Eigen::VectorXd& xi() const { return xi_; }
  const Eigen::VectorXd& eta() const { return eta_; }  // covector coefficients

 private:
  Eigen::MatrixXd phi_;
  Eigen::VectorXd xi_;
  Eigen::VectorXd eta_;
};

struct SasakianCheck {
  bool ok = false;
  double defect = 0.0;  // max-abs of K(X) phi Y + phi K(X) Y
};

SasakianCheck sasakian_statistical_check(const StatisticalStructure& stat,
                                         const SasakianData& sas, double tol = 1e-10);

/// nabla~^r = nabla^g + A^r with
/// A^r(X)Y = g(X, phi Y) xi - r eta(X) phi Y + eta(Y) phi X.
Connection sasaki_family_connection(const LieAlgebra& alg, const InnerProduct& ip,
                                    const SasakianData& sas, double r);

/// A^r alone, as a bilinear map (the homogeneous-structure candidate S).
BilinearMap sasaki_family_tensor(const InnerProduct& ip, const SasakianData& sas, double r);

/// Constant-frame tensor with enough tagging to take covariant derivatives.
class FrameTensor {
 public:
  static FrameTensor metric(std::string name, Eigen::MatrixXd g);
  static FrameTensor endomorphism(std::string name, Eigen::MatrixXd m);
  static FrameTensor vector(std::string name, Eigen::VectorXd v);
  static FrameTensor covector(std::string name, Eigen::VectorXd w);
  static FrameTensor bilinear(std::string name, BilinearMap b);
  static FrameTensor cubic(std::string name, CubicForm c);
  static FrameTensor curvature(std::string name, CurvatureTensor r);

  const std::string& name() const { return name_; }

  /// Max-abs of the covariant derivative under conn.
  double parallel_defect(const Connection& conn) const;

 private:
  enum class Kind { kMetric, kEndomorphism, kVector, kCovector, kBilinear, kCubic, kCurvature };
  FrameTensor(Kind kind, std::string name) : kind_(kind), name_(std::move(name)), c_(1), r_(1) {}

  Kind kind_;
  std::string name_;
  Eigen::MatrixXd m_;
  Eigen::VectorXd v_;
  BilinearMap b_;
  CubicForm c_;
  CurvatureTensor r_;
};

/// Per-tensor max covariant-derivative defects under conn_tilde; all zero
/// certifies the Ambrose-Singer conditions for the supplied tensors.
std::vector<std::pair<std::string, double>> ambrose_singer_check(
    const Connection& conn_tilde, const std::vector<FrameTensor>& tensors);

}  // namespace liestat
