#include "liestat/sasakian.hpp"

#include <cmath>

#include "liestat/errors.hpp"

namespace liestat {

SasakianData::SasakianData(const InnerProduct& ip, Eigen::MatrixXd phi, Eigen::VectorXd xi,
                           double tol)
    : phi_(std::move(phi)), xi_(std::move(xi)) {
  const int n = ip.dim();
  if (phi_.rows() != n || phi_.cols() != n || xi_.size() != n)
    throw ValidationError("sasakian data: dimension mismatch");
  eta_ = ip.gram() * xi_;
  const double d_phi2 =
      (phi_ * phi_ + Eigen::MatrixXd::Identity(n, n) - xi_ * eta_.transpose())
          .cwiseAbs()
          .maxCoeff();
  const double d_eta = std::abs(eta_.dot(xi_) - 1.0);
  const double d_metric =
      (phi_.transpose() * ip.gram() * phi_ - ip.gram() + eta_ * eta_.transpose())
          .cwiseAbs()
          .maxCoeff();
  const double defect = std::max({d_phi2, d_eta, d_metric});
  if (defect > tol)
    throw ValidationError("sasakian data: structure equations violated, defect " +
                          std::to_string(defect));
}

SasakianData SasakianData::canonical(const InnerProduct& ip) {
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(3, 3);
  phi(1, 0) = 1.0;
  phi(0, 1) = -1.0;
  return SasakianData(ip, phi, Eigen::VectorXd::Unit(3, 2));
}

SasakianCheck sasakian_statistical_check(const StatisticalStructure& stat,
                                         const SasakianData& sas, double tol) {
  const int n = stat.algebra().dim();
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd anti = stat.skewness().op(i) * sas.phi() + sas.phi() * stat.skewness().op(i);
    defect = std::max(defect, anti.cwiseAbs().maxCoeff());
  }
  return {defect <= tol, defect};
}

BilinearMap sasaki_family_tensor(const InnerProduct& ip, const SasakianData& sas, double r) {
  const int n = ip.dim();
  BilinearMap a(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      const Eigen::VectorXd v = ip.pairing(ei, sas.phi() * ej) * sas.xi() -
                                r * sas.eta()(i) * (sas.phi() * ej) +
                                sas.eta()(j) * (sas.phi() * ei);
      for (int k = 0; k < n; ++k) a.set(k, i, j, v(k));
    }
  }
  return a;
}

Connection sasaki_family_connection(const LieAlgebra& alg, const InnerProduct& ip,
                                    const SasakianData& sas, double r) {
  BilinearMap gamma = levi_civita(alg, ip).gamma();
  gamma += sasaki_family_tensor(ip, sas, r);
  return Connection(std::move(gamma));
}

FrameTensor FrameTensor::metric(std::string name, Eigen::MatrixXd g) {
  FrameTensor t(Kind::kMetric, std::move(name));
  t.m_ = std::move(g);
  return t;
}

FrameTensor FrameTensor::endomorphism(std::string name, Eigen::MatrixXd m) {
  FrameTensor t(Kind::kEndomorphism, std::move(name));
  t.m_ = std::move(m);
  return t;
}

FrameTensor FrameTensor::vector(std::string name, Eigen::VectorXd v) {
  FrameTensor t(Kind::kVector, std::move(name));
  t.v_ = std::move(v);
  return t;
}

FrameTensor FrameTensor::covector(std::string name, Eigen::VectorXd w) {
  FrameTensor t(Kind::kCovector, std::move(name));
  t.v_ = std::move(w);
  return t;
}

FrameTensor FrameTensor::bilinear(std::string name, BilinearMap b) {
  FrameTensor t(Kind::kBilinear, std::move(name));
  t.b_ = std::move(b);
  return t;
}

FrameTensor FrameTensor::cubic(std::string name, CubicForm c) {
  FrameTensor t(Kind::kCubic, std::move(name));
  t.c_ = std::move(c);
  return t;
}

FrameTensor FrameTensor::curvature(std::string name, CurvatureTensor r) {
  FrameTensor t(Kind::kCurvature, std::move(name));
  t.r_ = std::move(r);
  return t;
}

double FrameTensor::parallel_defect(const Connection& conn) const {
  const int n = conn.dim();
  double d = 0.0;
  switch (kind_) {
    case Kind::kMetric:
      for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXd m = conn.op(i).transpose() * m_;
        d = std::max(d, (m + m.transpose()).cwiseAbs().maxCoeff());
      }
      return d;
    case Kind::kEndomorphism:
      for (int i = 0; i < n; ++i)
        d = std::max(d, (conn.op(i) * m_ - m_ * conn.op(i)).cwiseAbs().maxCoeff());
      return d;
    case Kind::kVector:
      for (int i = 0; i < n; ++i)
        d = std::max(d, (conn.op(i) * v_).cwiseAbs().maxCoeff());
      return d;
    case Kind::kCovector:
      for (int i = 0; i < n; ++i)
        d = std::max(d, (conn.op(i).transpose() * v_).cwiseAbs().maxCoeff());
      return d;
    case Kind::kBilinear:
      for (const auto& slot : covariant_derivative(conn, b_))
        d = std::max(d, slot.max_abs());
      return d;
    case Kind::kCubic:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              double v = 0.0;
              for (int s = 0; s < n; ++s)
                v -= conn.op(i)(s, j) * c_(s, k, l) + conn.op(i)(s, k) * c_(j, s, l) +
                     conn.op(i)(s, l) * c_(j, k, s);
              d = std::max(d, std::abs(v));
            }
      return d;
    case Kind::kCurvature:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            Eigen::MatrixXd m = conn.op(i) * r_.op(j, k) - r_.op(j, k) * conn.op(i);
            for (int s = 0; s < n; ++s)
              m -= conn.op(i)(s, j) * r_.op(s, k) + conn.op(i)(s, k) * r_.op(j, s);
            d = std::max(d, m.cwiseAbs().maxCoeff());
          }
      return d;
  }
  return d;
}

std::vector<std::pair<std::string, double>> ambrose_singer_check(
    const Connection& conn_tilde, const std::vector<FrameTensor>& tensors) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(tensors.size());
  for (const auto& t : tensors) out.emplace_back(t.name(), t.parallel_defect(conn_tilde));
  return out;
}

}  // namespace liestat
