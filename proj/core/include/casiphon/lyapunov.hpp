#pragma once

#include <Eigen/Dense>
#include <vector>

#include "casiphon/covariance.hpp"

namespace casiphon {

// Drift matrix A(t) of du = A u dt + noise in a fixed quadrature basis.
struct DriftModel {
  enum class Kind { RwaConstant, FullModulated };

  Kind kind = Kind::RwaConstant;
  double gamma = 1.0;      // gamma_m
  double chi_eps = 0.0;    // eps*chi0, rotating-frame gain
  double chi0 = 0.0;       // static gain (FullModulated)
  double eps = 0.0;        // modulation depth (FullModulated)
  double omega_m = 0.0;    // shifted frequency Omega_m (FullModulated)
  double omega_mod = 0.0;  // modulation frequency, 2*Omega_m

  // [[-g/2, chi_eps], [chi_eps, -g/2]] in the rotating-frame basis.
  static DriftModel rwa_constant(double gamma, double chi_eps);
  // Lab-frame drift with counter-rotating terms,
  // [[-g/2, 2chi(t)+Om(t)], [2chi(t)-Om(t), -g/2]],
  // chi(t) = chi0 (1+eps cos Om_mod t), Om(t) = Omega_m - 2 chi_eps cos Om_mod t.
  static DriftModel full_modulated(double gamma, double chi0, double eps,
                                   double omega_m);

  Eigen::Matrix2d at(double t) const;
  double max_rate() const;          // fastest timescale of the drift
  double modulation_period() const; // 2 pi / omega_mod (FullModulated)
  Basis native_basis() const;
};

// Stationary noise matrix; canonical lab-frame value
//   D = diag(g(1+2n)/4, g((1+2n)+4 xi^2)/4).
struct DiffusionModel {
  double gamma = 1.0;
  double nbar = 0.0;
  double xi = 0.0;

  Eigen::Matrix2d lab() const;
  // Same physical noise expressed in another fixed basis (congruence
  // transform; the rotating basis keeps the lab matrix).
  Eigen::Matrix2d in_basis(Basis basis) const;
};

struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  int points = 101;  // output samples including both endpoints

  double dt() const { return (t1 - t0) / (points - 1); }
};

struct IntegratorOptions {
  // RK4 substeps per output interval; 0 = choose automatically from the
  // drift's fastest rate.
  int substeps = 0;
};

// Fixed-step RK4 on dV/dt = A(t) V + V A(t)^T + D, symmetry re-enforced each
// step, positive definiteness monitored.
CovarianceTrajectory integrate(const DriftModel& drift,
                               const DiffusionModel& diffusion,
                               const CovarianceState& v0, const TimeGrid& grid,
                               const IntegratorOptions& opts = {});

// Lab -> rotating frame at angular frequency omega_m.
CovarianceTrajectory rotate(const CovarianceTrajectory& traj, double omega_m);

// Rotating -> +-pi/4 eigenbasis; fills the n/S1/S2 observable series.
CovarianceTrajectory eigenbasis(const CovarianceTrajectory& traj);

// Centered sliding-window mean over one period; samples outside the full
// window keep the raw value.
std::vector<double> period_average(const std::vector<double>& times,
                                   const std::vector<double>& values,
                                   double period);

}  // namespace casiphon
