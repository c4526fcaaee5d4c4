#pragma once

#include <optional>

#include "casiphon/params.hpp"

namespace casiphon {

// Dimensionless inputs of the rotating-frame closed forms.
struct RwaInputs {
  double s_eps = 0.0;        // signed control chi_eps/gamma_m
  double noise_factor = 1.0; // C = 1 + 2 xi^2/(1+2 nbar)
  double nbar = 0.0;         // bath occupation
  double xi = 0.0;           // noise leak magnitude, >= 0
  double gamma = 1.0;        // gamma_m [rad/s]

  // Builds the consistent C from (xi, nbar).
  static RwaInputs with_xi(double s_eps, double xi, double nbar, double gamma);
  static RwaInputs from_derived(const DerivedParams& d);

  // Throws on range violations or a stale C (cross-field consistency 1e-12).
  void validate() const;

  double lambda1() const { return -0.5 * gamma - (s_eps * gamma); }
  double lambda2() const { return -0.5 * gamma + (s_eps * gamma); }
};

// Variances of the +-pi/4 quadratures at time t (vacuum = 1/4).
struct CovariancePair {
  double v1 = 0.0;  // Var X_{theta=pi/4}
  double v2 = 0.0;  // Var X_{theta=-pi/4}
  double t = 0.0;   // seconds
  bool stable = true;
};

struct PhononNumbers {
  double n = 0.0;
  double casimir = 0.0;
  double thermal = 0.0;
  std::optional<double> steady;  // set only when |s_eps| < 1/2
};

struct SqueezingPair {
  double s1 = 0.0;
  double s2 = 0.0;
  double t = 0.0;
  bool squeezed1 = false;  // s1 < 0
  bool squeezed2 = false;  // s2 < 0
  // Branch expected to squeeze: 1 for red detuning (s_eps>0), 2 for blue, 0 if
  // unmodulated.
  int squeezed_branch = 0;
};

CovariancePair covariance(double t, const RwaInputs& in);
// Off-diagonal of the transformed covariance, V12(t) = -(xi^2/2)(1-e^{-gamma t}).
double cross_covariance(double t, const RwaInputs& in);
double steady_cross_covariance(const RwaInputs& in);

PhononNumbers phonon_numbers(double t, const RwaInputs& in);
double steady_phonon_number(const RwaInputs& in);  // throws MarginalStability

SqueezingPair squeezing(double t, const RwaInputs& in);
SqueezingPair steady_squeezing(const RwaInputs& in);

// Largest bath occupation still compatible with steady-state squeezing, and
// the matching temperature bound.
double critical_occupation(double s_eps, double xi);
double critical_temperature(double s_eps, double xi, double mech_freq);

}  // namespace casiphon
