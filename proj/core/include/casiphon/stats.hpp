#pragma once

#include <complex>
#include <vector>

#include "casiphon/rwa.hpp"

namespace casiphon {

// Two-time rotating-frame correlators of the phonon fluctuation operator.
struct TwoTimeCorrelators {
  std::complex<double> normal;     // <b~+(t) b~(t+tau)>
  std::complex<double> anomalous;  // <b~+(t) b~+(t+tau)>
};

TwoTimeCorrelators two_time(double t, double tau, const RwaInputs& in);
// t -> infinity taken analytically (transients dropped).
TwoTimeCorrelators two_time_steady(double tau, const RwaInputs& in);

// Second-order coherence, g2(tau) = 1 + (|<b+b+>|^2 + |<b+b>|^2)/n^2.
double g2(double tau, const RwaInputs& in);                 // steady base time
double g2_at(double t, double tau, const RwaInputs& in);    // finite base time

struct CorrelationSeries {
  double base_time = 0.0;  // +inf for the steady state
  std::vector<double> tau;
  std::vector<std::complex<double>> normal;
  std::vector<std::complex<double>> anomalous;
  std::vector<double> g2;
  std::vector<double> g2_normalized;  // g2(tau)/g2(0)
};

CorrelationSeries steady_correlation_series(const std::vector<double>& tau_grid,
                                            const RwaInputs& in);

// 400 log-spaced lags spanning [1e-3, 10]/gamma.
std::vector<double> default_tau_grid(double gamma, int points = 400,
                                     double lo_gamma_tau = 1e-3,
                                     double hi_gamma_tau = 10.0);

// Moment set behind the verbatim Mandel formula; deterministic (d) and
// stochastic (s) parts of the decomposed evolution.
struct MandelMoments {
  double q = 0.0;
  double n = 0.0;                    // <b+b> assembled from the moments
  double b4 = 0.0;                   // <b+^2 b^2>
  std::complex<double> bs_sq;        // <b_s^2>
  double bs_dag_bs = 0.0;            // <b_s+ b_s>
  double bd4 = 0.0;                  // <b_d+^2 b_d^2>
  double bd_dag_bd = 0.0;            // <b_d+ b_d>
  double bd_sq = 0.0;                // <b_d^2>
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
};

// Verbatim moment-expansion Mandel parameter.
MandelMoments mandel_paper(double t, const RwaInputs& in);
// Independent Gaussian-state oracle, Q = n + |<b^2>|^2 / n.
double mandel_gauss(double t, const RwaInputs& in);
double mandel_gauss_steady(const RwaInputs& in);

struct MandelSeries {
  std::vector<double> times;
  std::vector<double> q_paper;
  std::vector<double> q_gauss;
};

MandelSeries mandel_series(const std::vector<double>& t_grid,
                           const RwaInputs& in);

}  // namespace casiphon
