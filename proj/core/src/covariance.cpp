#include "casiphon/covariance.hpp"

#include <cmath>

namespace casiphon {

const char* to_string(Basis b) {
  switch (b) {
    case Basis::Lab: return "lab";
    case Basis::RotatingOmegaM: return "rotating_omega_m";
    default: return "eigen_pm_pi4";
  }
}

CovarianceState CovarianceState::thermal(double nbar, Basis basis) {
  CovarianceState v;
  v.m = Eigen::Matrix2d::Identity() * (0.25 * (1.0 + 2.0 * nbar));
  v.basis = basis;
  return v;
}

bool CovarianceState::positive_definite(double tol) const {
  return m(0, 0) > tol && m.determinant() > tol;
}

Eigen::Matrix2d frame_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Eigen::Matrix2d eigenbasis_map() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2d t;
  t << inv_sqrt2, -inv_sqrt2, inv_sqrt2, inv_sqrt2;
  return t;
}

}  // namespace casiphon
