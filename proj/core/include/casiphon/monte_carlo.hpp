#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "casiphon/lyapunov.hpp"

namespace casiphon {

struct EnsembleSpec {
  long n_trajectories = 0;
  double dt = 0.0;          // Euler-Maruyama step [s]
  double duration = 0.0;    // simulated span [s]
  std::uint64_t seed = 0;
  DriftModel drift;
  DiffusionModel diffusion;
  CovarianceState v0;       // initial covariance, may be singular
  int record_stride = 1;    // keep every k-th step in the output
  int max_threads = 0;      // 0 = hardware concurrency

  // Throws UnstableStep / NonPsdDiffusion / NonPositiveInput.
  void validate() const;
  long steps() const;
};

struct EnsembleMoments {
  std::vector<double> times;
  std::vector<Eigen::Vector2d> mean;
  std::vector<Eigen::Vector2d> mean_se;
  std::vector<Eigen::Matrix2d> cov;     // E[u u^T], mean not subtracted
  std::vector<Eigen::Matrix2d> cov_se;  // std error of each entry
};

// Classical sampling of the symmetrized moments: N independent trajectories
// of du = A(t) u dt + B dW with B B^T = D. Bit-reproducible for a given
// (seed, N, dt) independent of thread count.
EnsembleMoments simulate(const EnsembleSpec& spec);

struct TwoTimeSample {
  double base_time = 0.0;
  std::vector<double> tau;
  std::vector<Eigen::Matrix2d> lag_cov;     // E[u(t) u(t+tau)^T]
  std::vector<Eigen::Matrix2d> lag_cov_se;
};

TwoTimeSample two_time_sample(const EnsembleSpec& spec, double base_time,
                              const std::vector<double>& tau_grid);

// Regression prediction V(t) e^{A^T tau} for the constant drift.
Eigen::Matrix2d regression_prediction(const Eigen::Matrix2d& v_t,
                                      const DriftModel& drift, double tau);

// Symmetric square root used to color the noise; throws NonPsdDiffusion on a
// matrix with a genuinely negative eigenvalue.
Eigen::Matrix2d matrix_sqrt_psd(const Eigen::Matrix2d& m);

}  // namespace casiphon
