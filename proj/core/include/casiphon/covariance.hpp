#pragma once

#include <Eigen/Dense>
#include <vector>

namespace casiphon {

enum class Basis { Lab, RotatingOmegaM, EigenPm45 };

const char* to_string(Basis b);

// Symmetrized 2x2 quadrature covariance at one instant.
struct CovarianceState {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  Basis basis = Basis::Lab;

  static CovarianceState thermal(double nbar, Basis basis);
  bool positive_definite(double tol = 0.0) const;
};

// Rotation undoing free evolution at angular frequency omega:
//   Xr = X cos(omega t) - P sin(omega t),  Pr = X sin(omega t) + P cos(omega t)
Eigen::Matrix2d frame_rotation(double angle);

// Orthogonal map from the rotating (X,P) basis to the +-pi/4 eigenbasis,
// u1 = (X-P)/sqrt2, u2 = (X+P)/sqrt2.
Eigen::Matrix2d eigenbasis_map();

struct CovarianceTrajectory {
  std::vector<double> times;              // seconds, strictly increasing
  std::vector<Eigen::Matrix2d> states;    // one per grid point
  Basis basis = Basis::Lab;
  double gamma = 1.0;                     // gamma_m used for gamma*t export

  // Derived observable series; populated only in the eigenbasis.
  std::vector<double> n;
  std::vector<double> s1;
  std::vector<double> s2;

  std::size_t size() const { return times.size(); }
};

}  // namespace casiphon
