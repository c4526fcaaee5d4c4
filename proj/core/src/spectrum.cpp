#include "casiphon/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "casiphon/errors.hpp"

namespace casiphon {

namespace {

void require_stable(const RwaInputs& in) {
  if (!(std::abs(in.s_eps) < 0.5)) {
    throw MarginalStability("spectrum requires |s_eps| < 1/2");
  }
}

}  // namespace

double sxx_gamma_at(double omega_tilde, const RwaInputs& in) {
  const double w2 = omega_tilde * omega_tilde;
  const double s2 = in.s_eps * in.s_eps;
  const double opn = 1.0 + 2.0 * in.nbar;
  const double xi2 = in.xi * in.xi;
  const double numer = opn * (1.0 + 4.0 * w2) + 4.0 * s2 * (opn + 4.0 * xi2);
  const double quart = 0.25 * (1.0 - 4.0 * s2) - w2;
  const double denom = 16.0 * (w2 + quart * quart);
  return numer / denom;
}

SpectrumResult evaluate_spectrum(const std::vector<double>& omega_tilde,
                                 const RwaInputs& in) {
  require_stable(in);
  if (omega_tilde.size() < 3) {
    throw NonPositiveInput("spectrum grid needs at least 3 points");
  }
  SpectrumResult r;
  r.inputs = in;
  r.omega_tilde = omega_tilde;
  r.sxx_gamma.reserve(omega_tilde.size());
  for (const double w : omega_tilde) r.sxx_gamma.push_back(sxx_gamma_at(w, in));

  const auto peak_it = std::max_element(r.sxx_gamma.begin(), r.sxx_gamma.end());
  const std::size_t peak_idx = peak_it - r.sxx_gamma.begin();
  r.peak_omega_tilde = omega_tilde[peak_idx];
  r.peak_sxx_gamma = *peak_it;
  const double step = omega_tilde[1] - omega_tilde[0];
  r.non_central_peak = std::abs(r.peak_omega_tilde) > step;

  const double s0 = sxx_gamma_at(r.peak_omega_tilde, in);
  r.normalized.reserve(omega_tilde.size());
  for (const double v : r.sxx_gamma) r.normalized.push_back(v / s0);
  return r;
}

std::vector<double> default_omega_grid(double half_range, int points) {
  std::vector<double> grid;
  grid.reserve(points);
  for (int i = 0; i < points; ++i) {
    grid.push_back(-half_range +
                   2.0 * half_range * static_cast<double>(i) / (points - 1));
  }
  return grid;
}

namespace {

// Bisection for S(w) = target between bracketing abscissae a (above) and b
// (below), to 1e-6 in w.
double half_crossing(double a, double b, double target, const RwaInputs& in) {
  for (int iter = 0; iter < 80 && std::abs(b - a) > 1e-6; ++iter) {
    const double mid = 0.5 * (a + b);
    if (sxx_gamma_at(mid, in) >= target) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

FwhmResult fwhm(const SpectrumResult& r) {
  const double peak_w = r.peak_omega_tilde;
  const double target = 0.5 * r.peak_sxx_gamma;

  const auto& grid = r.omega_tilde;
  const auto& vals = r.sxx_gamma;
  const std::size_t n = grid.size();
  std::size_t ip = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i] == peak_w) {
      ip = i;
      break;
    }
  }

  std::size_t right = ip;
  while (right + 1 < n && vals[right + 1] >= target) ++right;
  if (right + 1 >= n) {
    throw NoHalfCrossing("grid too narrow on the high-frequency side");
  }
  std::size_t left = ip;
  while (left > 0 && vals[left - 1] >= target) --left;
  if (left == 0) {
    throw NoHalfCrossing("grid too narrow on the low-frequency side");
  }

  const double w_right = half_crossing(grid[right], grid[right + 1], target,
                                       r.inputs);
  const double w_left = half_crossing(grid[left], grid[left - 1], target,
                                      r.inputs);
  FwhmResult out;
  out.width_omega_tilde = w_right - w_left;
  out.width_rad_s = out.width_omega_tilde * r.inputs.gamma;
  out.non_central_peak = r.non_central_peak;
  return out;
}

std::complex<double> mech_susceptibility(double omega, double gamma) {
  return 1.0 / std::complex<double>(0.5 * gamma, -omega);
}

std::complex<double> transfer_gx(double omega, double gamma, double chi_eps) {
  const std::complex<double> chi_m = mech_susceptibility(omega, gamma);
  return chi_m / (1.0 - chi_eps * chi_eps * chi_m * chi_m);
}

std::complex<double> transfer_gp(double omega, double gamma, double chi_eps) {
  return chi_eps * mech_susceptibility(omega, gamma) *
         transfer_gx(omega, gamma, chi_eps);
}

CasimirCenters casimir_center(const DerivedParams& d) {
  CasimirCenters c;
  const double shift = 2.0 * std::abs(d.nonlinear_gain);
  c.red = d.mech_freq - shift;
  c.blue = d.mech_freq + shift;
  c.active = d.detuning > 0.0 ? c.red : c.blue;
  return c;
}

}  // namespace casiphon
