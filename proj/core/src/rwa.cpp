#include "casiphon/rwa.hpp"

#include <cmath>
#include <limits>

#include "casiphon/errors.hpp"

namespace casiphon {

namespace {

constexpr double kDenominatorGuard = 1e-9;

// One eigenbranch of the diagonalized dynamics. `plus` selects the
// (1 + 2 s_eps) branch (lambda1); the expressions are arranged so that
// branch(+1, s) and branch(-1, -s) evaluate bit-identically, which makes the
// red/blue relabeling symmetry exact rather than approximate.
struct Branch {
  double denom;   // 1 +- 2 s_eps
  double lambda;  // -gamma (1 +- 2 s_eps)/2
};

Branch make_branch(bool plus, const RwaInputs& in) {
  const double two_s = 2.0 * in.s_eps;
  Branch b;
  b.denom = plus ? 1.0 + two_s : 1.0 - two_s;
  b.lambda = -0.5 * in.gamma * b.denom;
  return b;
}

void guard_denominators(const RwaInputs& in) {
  const double two_s = 2.0 * in.s_eps;
  if (std::abs(1.0 + two_s) < kDenominatorGuard ||
      std::abs(1.0 - two_s) < kDenominatorGuard) {
    throw MarginalStability("|s_eps| too close to 1/2 for the closed forms");
  }
}

void require_stable(const RwaInputs& in, const char* what) {
  if (!(std::abs(in.s_eps) < 0.5)) {
    throw MarginalStability(std::string(what) +
                            " requires |s_eps| < 1/2 (stable regime)");
  }
  guard_denominators(in);
}

double branch_variance(bool plus, double t, const RwaInputs& in) {
  const Branch b = make_branch(plus, in);
  const double pref = 0.25 * (1.0 + 2.0 * in.nbar);
  const double omc = 1.0 - in.noise_factor;
  const double two_s = 2.0 * in.s_eps;
  const double trans = plus ? omc + two_s : omc - two_s;
  return pref * (in.noise_factor / b.denom +
                 std::exp(2.0 * b.lambda * t) * trans / b.denom);
}

}  // namespace

RwaInputs RwaInputs::with_xi(double s_eps, double xi, double nbar, double gamma) {
  RwaInputs in;
  in.s_eps = s_eps;
  in.xi = xi;
  in.nbar = nbar;
  in.gamma = gamma;
  in.noise_factor = 1.0 + 2.0 * xi * xi / (1.0 + 2.0 * nbar);
  in.validate();
  return in;
}

RwaInputs RwaInputs::from_derived(const DerivedParams& d) {
  return with_xi(d.control, std::abs(d.noise_leak), d.bath_occupation,
                 d.mech_damping);
}

void RwaInputs::validate() const {
  if (!(gamma > 0.0)) throw NonPositiveInput("gamma must be > 0");
  if (!(nbar >= 0.0)) throw NonPositiveOccupation("nbar must be >= 0");
  if (!(xi >= 0.0)) throw NonPositiveInput("xi must be >= 0");
  if (!std::isfinite(s_eps)) throw NonPositiveInput("s_eps must be finite");
  const double expected = 1.0 + 2.0 * xi * xi / (1.0 + 2.0 * nbar);
  if (std::abs(noise_factor - expected) > 1e-12 * expected) {
    throw NonPositiveInput("noise_factor inconsistent with (xi, nbar)");
  }
}

CovariancePair covariance(double t, const RwaInputs& in) {
  if (t < 0.0) throw NegativeTime("time must be >= 0");
  guard_denominators(in);
  CovariancePair out;
  out.t = t;
  out.stable = std::abs(in.s_eps) < 0.5;
  if (t == 0.0) {
    // Thermal initial condition, exact.
    out.v1 = out.v2 = 0.25 * (1.0 + 2.0 * in.nbar);
    return out;
  }
  out.v1 = branch_variance(true, t, in);
  out.v2 = branch_variance(false, t, in);
  return out;
}

double cross_covariance(double t, const RwaInputs& in) {
  if (t < 0.0) throw NegativeTime("time must be >= 0");
  return 0.5 * in.xi * in.xi * std::expm1(-in.gamma * t);
}

double steady_cross_covariance(const RwaInputs& in) {
  return -0.5 * in.xi * in.xi;
}

PhononNumbers phonon_numbers(double t, const RwaInputs& in) {
  const CovariancePair v = covariance(t, in);
  PhononNumbers out;
  out.n = v.v1 + v.v2 - 0.5;

  const Branch bp = make_branch(true, in);
  const Branch bm = make_branch(false, in);
  const double s = in.s_eps;
  const double xi2 = in.xi * in.xi;
  const double s2 = s * s;
  const double one_m4s2 = bp.denom * bm.denom;  // (1+2s)(1-2s) = 1-4s^2
  const double e1 = std::exp(2.0 * bp.lambda * t);
  const double e2 = std::exp(2.0 * bm.lambda * t);

  const double cas_ss = (2.0 * s2 + xi2) / one_m4s2;
  const double a_plus = (s - xi2) / bp.denom;
  const double a_minus = (s + xi2) / bm.denom;
  out.casimir = cas_ss + 0.5 * (a_plus * e1 - a_minus * e2);

  out.thermal =
      in.nbar * (1.0 / one_m4s2 + s * (e1 / bp.denom - e2 / bm.denom));

  if (v.stable) out.steady = steady_phonon_number(in);
  return out;
}

double steady_phonon_number(const RwaInputs& in) {
  require_stable(in, "steady_phonon_number");
  const double s2 = in.s_eps * in.s_eps;
  const double c = in.noise_factor;
  return (2.0 * (c - 1.0) + 4.0 * c * in.nbar + 8.0 * s2) /
         (4.0 * (1.0 - 4.0 * s2));
}

namespace {

SqueezingPair squeezing_from_pair(const CovariancePair& v, const RwaInputs& in) {
  SqueezingPair out;
  out.t = v.t;
  out.s1 = 4.0 * v.v1 - 1.0;
  out.s2 = 4.0 * v.v2 - 1.0;
  out.squeezed1 = out.s1 < 0.0;
  out.squeezed2 = out.s2 < 0.0;
  out.squeezed_branch = in.s_eps > 0.0 ? 1 : (in.s_eps < 0.0 ? 2 : 0);
  return out;
}

}  // namespace

SqueezingPair squeezing(double t, const RwaInputs& in) {
  return squeezing_from_pair(covariance(t, in), in);
}

SqueezingPair steady_squeezing(const RwaInputs& in) {
  require_stable(in, "steady_squeezing");
  const Branch bp = make_branch(true, in);
  const Branch bm = make_branch(false, in);
  const double two_s = 2.0 * in.s_eps;
  const double base = (in.noise_factor - 1.0) + 2.0 * in.noise_factor * in.nbar;
  SqueezingPair out;
  out.t = std::numeric_limits<double>::infinity();
  out.s1 = (base - two_s) / bp.denom;
  out.s2 = (base + two_s) / bm.denom;
  out.squeezed1 = out.s1 < 0.0;
  out.squeezed2 = out.s2 < 0.0;
  out.squeezed_branch = in.s_eps > 0.0 ? 1 : (in.s_eps < 0.0 ? 2 : 0);
  return out;
}

double critical_occupation(double s_eps, double xi) {
  if (!(xi >= 0.0)) throw NonPositiveInput("xi must be >= 0");
  const double sigma = std::abs(s_eps);
  if (!(sigma < 0.5)) {
    throw MarginalStability("critical_occupation requires |s_eps| < 1/2");
  }
  const double xi2 = xi * xi;
  // Self-consistent solution of nbar = (1-C+2|s|)/(2(3C-1+2|s|)) with
  // C = 1 + 2 xi^2/(1+2 nbar); reduces to the xi=0 form |s|/(2(1+|s|)).
  const double b = 1.0 + 2.0 * sigma - 3.0 * xi2;
  const double disc = b * b + 8.0 * xi2 * (1.0 + sigma);
  const double ncr =
      (std::sqrt(disc) - (1.0 + 3.0 * xi2)) / (4.0 * (1.0 + sigma));
  // Squeezing window: (C-1)/2 <= |s| evaluated at nbar = ncr.
  const double half_c_minus_1 = xi2 / (1.0 + 2.0 * ncr);
  if (half_c_minus_1 > sigma) {
    throw NoSqueezingWindow("noise leak exceeds the modulation control");
  }
  return ncr;
}

double critical_temperature(double s_eps, double xi, double mech_freq) {
  const double ncr = critical_occupation(s_eps, xi);
  if (ncr == 0.0) return 0.0;
  return temperature_from_occupation(ncr, mech_freq);
}

}  // namespace casiphon
