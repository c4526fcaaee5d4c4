#include "casiphon/stats.hpp"

#include <cmath>
#include <limits>

#include "casiphon/errors.hpp"

namespace casiphon {

namespace {

constexpr double kZeroPopulation = 1e-30;

struct Lambdas {
  double l1, l2;
};

Lambdas lambdas(const RwaInputs& in) {
  const double two_s = 2.0 * in.s_eps;
  return {-0.5 * in.gamma * (1.0 + two_s), -0.5 * in.gamma * (1.0 - two_s)};
}

void require_nonnegative_times(double t, double tau) {
  if (t < 0.0 || tau < 0.0) throw NegativeTime("t and tau must be >= 0");
}

void require_stable(const RwaInputs& in, const char* what) {
  if (!(std::abs(in.s_eps) < 0.5)) {
    throw MarginalStability(std::string(what) + " requires |s_eps| < 1/2");
  }
}

// Correlators assembled from the equal-time covariance by one-sided
// regression: each eigenmode decays as e^{lambda_i tau} against any earlier
// operator. Coincides with the displayed coefficient form when C = 1 and
// stays consistent with n(t) at tau = 0 for all xi.
TwoTimeCorrelators correlators_from_state(double v1, double v2, double v12,
                                          double tau, const RwaInputs& in) {
  const Lambdas l = lambdas(in);
  const double e1 = std::exp(l.l1 * tau);
  const double e2 = std::exp(l.l2 * tau);
  const double a1 = v1 - 0.25;
  const double a2 = v2 - 0.25;
  TwoTimeCorrelators out;
  out.normal = {a1 * e1 + a2 * e2, v12 * (e2 - e1)};
  out.anomalous = {a1 * e1 - a2 * e2, -v12 * (e1 + e2)};
  return out;
}

}  // namespace

TwoTimeCorrelators two_time(double t, double tau, const RwaInputs& in) {
  require_nonnegative_times(t, tau);
  const CovariancePair v = covariance(t, in);
  return correlators_from_state(v.v1, v.v2, cross_covariance(t, in), tau, in);
}

TwoTimeCorrelators two_time_steady(double tau, const RwaInputs& in) {
  if (tau < 0.0) throw NegativeTime("tau must be >= 0");
  require_stable(in, "two_time_steady");
  const double pref = 0.25 * (1.0 + 2.0 * in.nbar);
  const double v1 = pref * in.noise_factor / (1.0 + 2.0 * in.s_eps);
  const double v2 = pref * in.noise_factor / (1.0 - 2.0 * in.s_eps);
  return correlators_from_state(v1, v2, steady_cross_covariance(in), tau, in);
}

namespace {

double g2_from(const TwoTimeCorrelators& c, double n) {
  if (!(n > kZeroPopulation)) {
    throw ZeroPopulation("g2 undefined at vanishing phonon population");
  }
  const double n2 = n * n;
  return 1.0 + std::norm(c.anomalous) / n2 + std::norm(c.normal) / n2;
}

}  // namespace

double g2(double tau, const RwaInputs& in) {
  return g2_from(two_time_steady(tau, in), steady_phonon_number(in));
}

double g2_at(double t, double tau, const RwaInputs& in) {
  return g2_from(two_time(t, tau, in), phonon_numbers(t, in).n);
}

CorrelationSeries steady_correlation_series(const std::vector<double>& tau_grid,
                                            const RwaInputs& in) {
  CorrelationSeries s;
  s.base_time = std::numeric_limits<double>::infinity();
  const double n = steady_phonon_number(in);
  const double g20 = g2_from(two_time_steady(0.0, in), n);
  s.tau.reserve(tau_grid.size());
  for (const double tau : tau_grid) {
    const TwoTimeCorrelators c = two_time_steady(tau, in);
    s.tau.push_back(tau);
    s.normal.push_back(c.normal);
    s.anomalous.push_back(c.anomalous);
    const double g = g2_from(c, n);
    s.g2.push_back(g);
    s.g2_normalized.push_back(g / g20);
  }
  return s;
}

std::vector<double> default_tau_grid(double gamma, int points,
                                     double lo_gamma_tau, double hi_gamma_tau) {
  std::vector<double> grid;
  grid.reserve(points);
  const double llo = std::log(lo_gamma_tau);
  const double lhi = std::log(hi_gamma_tau);
  for (int i = 0; i < points; ++i) {
    const double f = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
    grid.push_back(std::exp(llo + f * (lhi - llo)) / gamma);
  }
  return grid;
}

MandelMoments mandel_paper(double t, const RwaInputs& in) {
  if (t < 0.0) throw NegativeTime("time must be >= 0");
  require_stable(in, "mandel_paper");

  const Lambdas l = lambdas(in);
  const double g = in.gamma;
  const double nb = in.nbar;
  const double c = in.noise_factor;
  const double opn = 1.0 + 2.0 * nb;
  const double e1 = std::exp(2.0 * l.l1 * t);
  const double e2 = std::exp(2.0 * l.l2 * t);
  const double eg = std::exp(-g * t);

  // expm1 keeps the (e^{2 lambda t}-1)/(2 lambda) quotients accurate for
  // slow branches near the stability edge.
  const double q1 = std::expm1(2.0 * l.l1 * t) / (2.0 * l.l1);
  const double q2 = std::expm1(2.0 * l.l2 * t) / (2.0 * l.l2);

  MandelMoments m;
  m.bs_sq = {0.25 * g * c * opn * (q1 - q2),
             0.5 * (c - 1.0) * opn * (eg - 1.0)};
  m.bs_dag_bs = 0.25 * g * c * opn * (q1 + q2) + 0.5 * (eg - 1.0);

  const double n2_th = 2.0 * nb * nb + nb;  // thermal <n^2>
  m.r1 = (3.0 + 6.0 * nb + 6.0 * n2_th) / 16.0;
  m.r2 = -(1.0 + 2.0 * nb) / 2.0;
  m.r3 = (10.0 + 4.0 * nb + 4.0 * n2_th) / 16.0;
  m.bd4 = m.r1 * (e1 * e1 + e2 * e2) + m.r2 * eg * (e1 + e2) + m.r3 * eg * eg;
  m.bd_dag_bd = 0.25 * opn * (e1 + e2) - 0.5 * eg;
  m.bd_sq = 0.25 * opn * (e1 - e2);

  m.b4 = m.bd4 + 2.0 * m.bs_dag_bs * m.bs_dag_bs + std::norm(m.bs_sq) +
         2.0 * m.bd_sq * m.bs_sq.real() + 4.0 * m.bd_dag_bd * m.bs_dag_bs;
  m.n = m.bd_dag_bd + m.bs_dag_bs;
  if (!(m.n > kZeroPopulation)) {
    throw ZeroPopulation("Mandel parameter undefined at zero population");
  }
  m.q = (m.b4 - m.n * m.n) / m.n;
  return m;
}

double mandel_gauss(double t, const RwaInputs& in) {
  const PhononNumbers pn = phonon_numbers(t, in);
  if (!(pn.n > kZeroPopulation)) {
    throw ZeroPopulation("Mandel parameter undefined at zero population");
  }
  const CovariancePair v = covariance(t, in);
  const double v12 = cross_covariance(t, in);
  const double m_sq = (v.v1 - v.v2) * (v.v1 - v.v2) + 4.0 * v12 * v12;
  return pn.n + m_sq / pn.n;
}

double mandel_gauss_steady(const RwaInputs& in) {
  const double n = steady_phonon_number(in);
  if (!(n > kZeroPopulation)) {
    throw ZeroPopulation("Mandel parameter undefined at zero population");
  }
  const TwoTimeCorrelators c = two_time_steady(0.0, in);
  return n + std::norm(c.anomalous) / n;
}

MandelSeries mandel_series(const std::vector<double>& t_grid,
                           const RwaInputs& in) {
  MandelSeries s;
  s.times.reserve(t_grid.size());
  for (const double t : t_grid) {
    s.times.push_back(t);
    s.q_paper.push_back(mandel_paper(t, in).q);
    s.q_gauss.push_back(mandel_gauss(t, in));
  }
  return s;
}

}  // namespace casiphon
