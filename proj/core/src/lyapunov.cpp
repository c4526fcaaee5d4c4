#include "casiphon/lyapunov.hpp"

#include <cmath>
#include <string>

#include "casiphon/constants.hpp"
#include "casiphon/errors.hpp"

namespace casiphon {

DriftModel DriftModel::rwa_constant(double gamma, double chi_eps) {
  DriftModel d;
  d.kind = Kind::RwaConstant;
  d.gamma = gamma;
  d.chi_eps = chi_eps;
  return d;
}

DriftModel DriftModel::full_modulated(double gamma, double chi0, double eps,
                                      double omega_m) {
  DriftModel d;
  d.kind = Kind::FullModulated;
  d.gamma = gamma;
  d.chi0 = chi0;
  d.eps = eps;
  d.chi_eps = eps * chi0;
  d.omega_m = omega_m;
  d.omega_mod = 2.0 * omega_m;
  return d;
}

Eigen::Matrix2d DriftModel::at(double t) const {
  Eigen::Matrix2d a;
  if (kind == Kind::RwaConstant) {
    a << -0.5 * gamma, chi_eps, chi_eps, -0.5 * gamma;
    return a;
  }
  const double mod = std::cos(omega_mod * t);
  const double chi_t = chi0 * (1.0 + eps * mod);
  const double om_t = omega_m - 2.0 * chi_eps * mod;
  a << -0.5 * gamma, 2.0 * chi_t + om_t, 2.0 * chi_t - om_t, -0.5 * gamma;
  return a;
}

double DriftModel::max_rate() const {
  if (kind == Kind::RwaConstant) {
    return 0.5 * gamma + std::abs(chi_eps);
  }
  return 0.5 * gamma + std::abs(omega_m) + 2.0 * std::abs(chi_eps) +
         2.0 * std::abs(chi0) * (1.0 + eps);
}

double DriftModel::modulation_period() const {
  return omega_mod != 0.0 ? constants::two_pi / std::abs(omega_mod) : 0.0;
}

Basis DriftModel::native_basis() const {
  return kind == Kind::RwaConstant ? Basis::RotatingOmegaM : Basis::Lab;
}

Eigen::Matrix2d DiffusionModel::lab() const {
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = 0.25 * gamma * (1.0 + 2.0 * nbar);
  d(1, 1) = 0.25 * gamma * ((1.0 + 2.0 * nbar) + 4.0 * xi * xi);
  return d;
}

Eigen::Matrix2d DiffusionModel::in_basis(Basis basis) const {
  const Eigen::Matrix2d d = lab();
  if (basis == Basis::EigenPm45) {
    const Eigen::Matrix2d t = eigenbasis_map();
    return t * d * t.transpose();
  }
  // The stationary lab noise is reused in the rotating frame; its O(xi^2)
  // anisotropy would otherwise pick up a fast 2*Omega_m ripple.
  return d;
}

namespace {

int auto_substeps(const DriftModel& drift, double dt_out) {
  double target_dt;
  if (drift.kind == DriftModel::Kind::FullModulated) {
    target_dt = drift.modulation_period() / 200.0;
  } else {
    target_dt = 0.005 / drift.max_rate();
  }
  if (!(target_dt > 0.0)) return 1;
  return std::max(1, static_cast<int>(std::ceil(dt_out / target_dt)));
}

void enforce_step(const DriftModel& drift, double dt) {
  if (drift.kind == DriftModel::Kind::FullModulated) {
    const double period = drift.modulation_period();
    if (period <= 0.0 || dt > period / 40.0) {
      throw StepTooCoarse(
          "step must resolve the modulation: need >= 40 steps per period, "
          "got dt = " +
          std::to_string(dt) + ", period = " + std::to_string(period));
    }
  } else if (dt * drift.max_rate() > 1.0) {
    throw StepTooCoarse("step too coarse for drift rate " +
                        std::to_string(drift.max_rate()));
  }
}

Eigen::Matrix2d lyapunov_rhs(const Eigen::Matrix2d& a, const Eigen::Matrix2d& v,
                             const Eigen::Matrix2d& d) {
  return a * v + v * a.transpose() + d;
}

}  // namespace

CovarianceTrajectory integrate(const DriftModel& drift,
                               const DiffusionModel& diffusion,
                               const CovarianceState& v0, const TimeGrid& grid,
                               const IntegratorOptions& opts) {
  if (grid.points < 2 || !(grid.t1 > grid.t0)) {
    throw NonPositiveInput("time grid must be increasing with >= 2 points");
  }
  if (v0.basis != drift.native_basis()) {
    throw WrongBasis("initial covariance basis does not match the drift");
  }
  if (!v0.positive_definite()) {
    throw LostPositivity("initial covariance not positive definite", grid.t0);
  }

  const int substeps =
      opts.substeps > 0 ? opts.substeps : auto_substeps(drift, grid.dt());
  const double h = grid.dt() / substeps;
  enforce_step(drift, h);

  const Eigen::Matrix2d d = diffusion.in_basis(drift.native_basis());

  CovarianceTrajectory traj;
  traj.basis = drift.native_basis();
  traj.gamma = drift.gamma;
  traj.times.reserve(grid.points);
  traj.states.reserve(grid.points);

  Eigen::Matrix2d v = v0.m;
  traj.times.push_back(grid.t0);
  traj.states.push_back(v);

  for (int i = 1; i < grid.points; ++i) {
    const double t_base = grid.t0 + (i - 1) * grid.dt();
    for (int k = 0; k < substeps; ++k) {
      const double t = t_base + k * h;
      const Eigen::Matrix2d a1 = drift.at(t);
      const Eigen::Matrix2d a2 = drift.at(t + 0.5 * h);
      const Eigen::Matrix2d a3 = drift.at(t + h);
      const Eigen::Matrix2d k1 = lyapunov_rhs(a1, v, d);
      const Eigen::Matrix2d k2 = lyapunov_rhs(a2, v + 0.5 * h * k1, d);
      const Eigen::Matrix2d k3 = lyapunov_rhs(a2, v + 0.5 * h * k2, d);
      const Eigen::Matrix2d k4 = lyapunov_rhs(a3, v + h * k3, d);
      v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      v = 0.5 * (v + v.transpose().eval());
      if (!(v(0, 0) > 0.0 && v.determinant() > 0.0)) {
        throw LostPositivity("covariance lost positive definiteness",
                             t_base + (k + 1) * h);
      }
    }
    const double t_next = grid.t0 + i * grid.dt();
    traj.times.push_back(t_next);
    traj.states.push_back(v);
  }
  return traj;
}

CovarianceTrajectory rotate(const CovarianceTrajectory& traj, double omega_m) {
  if (traj.basis != Basis::Lab) {
    throw WrongBasis("rotate expects a lab-basis trajectory");
  }
  CovarianceTrajectory out;
  out.basis = Basis::RotatingOmegaM;
  out.gamma = traj.gamma;
  out.times = traj.times;
  out.states.reserve(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const Eigen::Matrix2d r = frame_rotation(omega_m * traj.times[i]);
    out.states.push_back(r * traj.states[i] * r.transpose());
  }
  return out;
}

CovarianceTrajectory eigenbasis(const CovarianceTrajectory& traj) {
  if (traj.basis != Basis::RotatingOmegaM) {
    throw WrongBasis("eigenbasis expects a rotating-frame trajectory");
  }
  CovarianceTrajectory out;
  out.basis = Basis::EigenPm45;
  out.gamma = traj.gamma;
  out.times = traj.times;
  out.states.reserve(traj.states.size());
  out.n.reserve(traj.states.size());
  out.s1.reserve(traj.states.size());
  out.s2.reserve(traj.states.size());
  const Eigen::Matrix2d t = eigenbasis_map();
  for (const auto& v : traj.states) {
    const Eigen::Matrix2d w = t * v * t.transpose();
    out.states.push_back(w);
    out.n.push_back(w(0, 0) + w(1, 1) - 0.5);
    out.s1.push_back(4.0 * w(0, 0) - 1.0);
    out.s2.push_back(4.0 * w(1, 1) - 1.0);
  }
  return out;
}

std::vector<double> period_average(const std::vector<double>& times,
                                   const std::vector<double>& values,
                                   double period) {
  if (times.size() != values.size()) {
    throw NonPositiveInput("times/values size mismatch");
  }
  std::vector<double> out(values);
  if (!(period > 0.0) || times.size() < 3) return out;
  const double half = 0.5 * period;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double a = times[i] - half;
    const double b = times[i] + half;
    if (a < times.front() || b > times.back()) continue;  // keep raw value
    while (lo < times.size() && times[lo] < a) ++lo;
    if (hi < lo) hi = lo;
    while (hi + 1 < times.size() && times[hi + 1] <= b) ++hi;
    double acc = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) acc += values[k];
    out[i] = acc / static_cast<double>(hi - lo + 1);
  }
  return out;
}

}  // namespace casiphon
