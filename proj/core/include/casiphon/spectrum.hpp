#pragma once

#include <complex>
#include <vector>

#include "casiphon/rwa.hpp"

namespace casiphon {

// Sampled symmetrized displacement spectrum on a dimensionless grid
// w = (omega - Omega_m)/gamma_m. Values are stored as gamma_m * S_xx.
struct SpectrumResult {
  std::vector<double> omega_tilde;
  std::vector<double> sxx_gamma;   // gamma_m * S_xx, dimensionless
  std::vector<double> normalized;  // S/S(0)
  double peak_omega_tilde = 0.0;
  double peak_sxx_gamma = 0.0;
  bool non_central_peak = false;
  RwaInputs inputs;  // retained so the half-max search can refine off-grid
};

struct FwhmResult {
  double width_omega_tilde = 0.0;
  double width_rad_s = 0.0;
  bool non_central_peak = false;
};

// gamma_m * S_xx at one dimensionless frequency.
double sxx_gamma_at(double omega_tilde, const RwaInputs& in);

SpectrumResult evaluate_spectrum(const std::vector<double>& omega_tilde,
                                 const RwaInputs& in);

std::vector<double> default_omega_grid(double half_range = 5.0,
                                       int points = 4001);

// Half-max width by bisection on each side of the peak, tol 1e-6 in w.
FwhmResult fwhm(const SpectrumResult& result);

// Mechanical susceptibility and closed-loop transfer functions feeding the
// spectrum; omega is the angular offset from the spectral center [rad/s].
std::complex<double> mech_susceptibility(double omega, double gamma);
std::complex<double> transfer_gx(double omega, double gamma, double chi_eps);
std::complex<double> transfer_gp(double omega, double gamma, double chi_eps);

struct CasimirCenters {
  double red = 0.0;    // omega_m - 2|chi0|
  double blue = 0.0;   // omega_m + 2|chi0|
  double active = 0.0; // selected by the sign of the detuning
};

CasimirCenters casimir_center(const DerivedParams& d);

}  // namespace casiphon
