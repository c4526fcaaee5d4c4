#include "casiphon/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "casiphon/errors.hpp"
#include "casiphon/rng.hpp"

namespace casiphon {

namespace {

constexpr long kBlockSize = 64;

long recorded_count(long steps, int stride) {
  long r = steps / stride + 1;           // indices 0, stride, 2*stride, ...
  if (steps % stride != 0) ++r;          // final step kept as well
  return r;
}

long record_slot(long step, long steps, int stride) {
  if (step % stride == 0) return step / stride;
  if (step == steps) return steps / stride + 1;
  return -1;
}

int worker_count(const EnsembleSpec& spec, long n_blocks) {
  int t = spec.max_threads > 0
              ? spec.max_threads
              : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return static_cast<int>(std::min<long>(t, n_blocks));
}

// Accumulator layout per recorded time: 8 doubles
// [sx, sp, sxx, sxp, spp, s(xx)^2, s(xp)^2, s(pp)^2]
constexpr int kMomentsPerTime = 8;

void pairwise_merge(std::vector<std::vector<double>>& slots) {
  while (slots.size() > 1) {
    std::vector<std::vector<double>> next;
    next.reserve((slots.size() + 1) / 2);
    for (std::size_t i = 0; i < slots.size(); i += 2) {
      if (i + 1 < slots.size()) {
        for (std::size_t k = 0; k < slots[i].size(); ++k) {
          slots[i][k] += slots[i + 1][k];
        }
      }
      next.push_back(std::move(slots[i]));
    }
    slots.swap(next);
  }
}

}  // namespace

Eigen::Matrix2d matrix_sqrt_psd(const Eigen::Matrix2d& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  Eigen::Vector2d ev = es.eigenvalues();
  const double scale = std::max({1.0, std::abs(ev(0)), std::abs(ev(1))});
  for (int i = 0; i < 2; ++i) {
    if (ev(i) < -1e-12 * scale) {
      throw NonPsdDiffusion("matrix has a negative eigenvalue");
    }
    ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * ev.asDiagonal() *
         es.eigenvectors().transpose();
}

void EnsembleSpec::validate() const {
  if (n_trajectories < 2) throw NonPositiveInput("need N >= 2 trajectories");
  if (!(dt > 0.0) || !(duration >= dt)) {
    throw NonPositiveInput("need dt > 0 and duration >= dt");
  }
  if (record_stride < 1) throw NonPositiveInput("record_stride must be >= 1");
  if (dt * drift.max_rate() >= 0.1) {
    throw UnstableStep("dt * max drift rate must stay below 0.1");
  }
  if (v0.basis != drift.native_basis()) {
    throw WrongBasis("initial covariance basis does not match the drift");
  }
  const Eigen::Matrix2d v = v0.m;
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if (v(0, 0) < -1e-12 * scale || v(1, 1) < -1e-12 * scale ||
      v.determinant() < -1e-12 * scale * scale) {
    throw NonPositiveInput("initial covariance not positive semidefinite");
  }
  matrix_sqrt_psd(diffusion.in_basis(drift.native_basis()));  // PSD gate
}

long EnsembleSpec::steps() const {
  return std::max<long>(1, std::llround(duration / dt));
}

namespace {

// Walks one trajectory and hands every recorded state to `sink(slot, u)`.
template <typename Sink>
void run_trajectory(const EnsembleSpec& spec, long traj,
                    const Eigen::Matrix2d& b0, const Eigen::Matrix2d& b_dt,
                    long steps, int stride, Sink&& sink) {
  const GaussianPair init = gaussian_pair(spec.seed, traj, 0);
  Eigen::Vector2d u = b0 * Eigen::Vector2d(init.z0, init.z1);
  long slot = record_slot(0, steps, stride);
  if (slot >= 0) sink(slot, u);
  const bool constant_drift =
      spec.drift.kind == DriftModel::Kind::RwaConstant;
  Eigen::Matrix2d prop;
  if (constant_drift) {
    prop = Eigen::Matrix2d::Identity() + spec.dt * spec.drift.at(0.0);
  }
  for (long k = 1; k <= steps; ++k) {
    const GaussianPair z = gaussian_pair(spec.seed, traj, k);
    if (!constant_drift) {
      prop = Eigen::Matrix2d::Identity() +
             spec.dt * spec.drift.at((k - 1) * spec.dt);
    }
    u = prop * u + b_dt * Eigen::Vector2d(z.z0, z.z1);
    slot = record_slot(k, steps, stride);
    if (slot >= 0) sink(slot, u);
  }
}

}  // namespace

EnsembleMoments simulate(const EnsembleSpec& spec) {
  spec.validate();
  const long steps = spec.steps();
  const int stride = spec.record_stride;
  const long n_rec = recorded_count(steps, stride);
  const long n_blocks = (spec.n_trajectories + kBlockSize - 1) / kBlockSize;

  const Eigen::Matrix2d b0 = matrix_sqrt_psd(spec.v0.m);
  const Eigen::Matrix2d b_dt =
      matrix_sqrt_psd(spec.diffusion.in_basis(spec.drift.native_basis())) *
      std::sqrt(spec.dt);

  std::vector<std::vector<double>> slots(
      n_blocks, std::vector<double>(n_rec * kMomentsPerTime, 0.0));

  auto run_block = [&](long block) {
    auto& acc = slots[block];
    const long lo = block * kBlockSize;
    const long hi = std::min(lo + kBlockSize, spec.n_trajectories);
    for (long traj = lo; traj < hi; ++traj) {
      run_trajectory(spec, traj, b0, b_dt, steps, stride,
                     [&acc](long slot, const Eigen::Vector2d& u) {
                       double* a = acc.data() + slot * kMomentsPerTime;
                       const double xx = u(0) * u(0);
                       const double xp = u(0) * u(1);
                       const double pp = u(1) * u(1);
                       a[0] += u(0);
                       a[1] += u(1);
                       a[2] += xx;
                       a[3] += xp;
                       a[4] += pp;
                       a[5] += xx * xx;
                       a[6] += xp * xp;
                       a[7] += pp * pp;
                     });
    }
  };

  const int workers = worker_count(spec, n_blocks);
  if (workers <= 1) {
    for (long b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (long b = w; b < n_blocks; b += workers) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  pairwise_merge(slots);
  const std::vector<double>& acc = slots.front();

  EnsembleMoments out;
  const double n = static_cast<double>(spec.n_trajectories);
  out.times.reserve(n_rec);
  for (long r = 0; r < n_rec; ++r) {
    const long step = (r <= steps / stride) ? r * stride : steps;
    out.times.push_back(step * spec.dt);
    const double* a = acc.data() + r * kMomentsPerTime;
    Eigen::Vector2d mean(a[0] / n, a[1] / n);
    Eigen::Matrix2d cov;
    cov << a[2] / n, a[3] / n, a[3] / n, a[4] / n;
    Eigen::Matrix2d cov_se;
    const double vxx = std::max(0.0, a[5] / n - (a[2] / n) * (a[2] / n));
    const double vxp = std::max(0.0, a[6] / n - (a[3] / n) * (a[3] / n));
    const double vpp = std::max(0.0, a[7] / n - (a[4] / n) * (a[4] / n));
    cov_se << std::sqrt(vxx / n), std::sqrt(vxp / n), std::sqrt(vxp / n),
        std::sqrt(vpp / n);
    Eigen::Vector2d mean_se(
        std::sqrt(std::max(0.0, cov(0, 0) - mean(0) * mean(0)) / n),
        std::sqrt(std::max(0.0, cov(1, 1) - mean(1) * mean(1)) / n));
    out.mean.push_back(mean);
    out.mean_se.push_back(mean_se);
    out.cov.push_back(cov);
    out.cov_se.push_back(cov_se);
  }
  return out;
}

TwoTimeSample two_time_sample(const EnsembleSpec& spec, double base_time,
                              const std::vector<double>& tau_grid) {
  spec.validate();
  const long steps = spec.steps();
  const long base = std::llround(base_time / spec.dt);
  if (base < 0 || base > steps) {
    throw LagBeyondDuration("base time outside the simulated span");
  }
  std::vector<long> lag_steps;
  lag_steps.reserve(tau_grid.size());
  for (const double tau : tau_grid) {
    const long l = std::llround(tau / spec.dt);
    if (l < 0 || base + l > steps) {
      throw LagBeyondDuration("base time + lag outside the simulated span");
    }
    lag_steps.push_back(l);
  }

  const Eigen::Matrix2d b0 = matrix_sqrt_psd(spec.v0.m);
  const Eigen::Matrix2d b_dt =
      matrix_sqrt_psd(spec.diffusion.in_basis(spec.drift.native_basis())) *
      std::sqrt(spec.dt);
  const long n_blocks = (spec.n_trajectories + kBlockSize - 1) / kBlockSize;
  const std::size_t n_lags = lag_steps.size();
  // 4 products + 4 squared products per lag
  std::vector<std::vector<double>> slots(
      n_blocks, std::vector<double>(n_lags * 8, 0.0));

  auto run_block = [&](long block) {
    auto& acc = slots[block];
    const long lo = block * kBlockSize;
    const long hi = std::min(lo + kBlockSize, spec.n_trajectories);
    for (long traj = lo; traj < hi; ++traj) {
      Eigen::Vector2d u_base = Eigen::Vector2d::Zero();
      run_trajectory(
          spec, traj, b0, b_dt, steps, 1,
          [&](long step, const Eigen::Vector2d& u) {
            if (step == base) u_base = u;
            for (std::size_t k = 0; k < n_lags; ++k) {
              if (step == base + lag_steps[k]) {
                double* a = acc.data() + k * 8;
                const double p[4] = {u_base(0) * u(0), u_base(0) * u(1),
                                     u_base(1) * u(0), u_base(1) * u(1)};
                for (int j = 0; j < 4; ++j) {
                  a[j] += p[j];
                  a[4 + j] += p[j] * p[j];
                }
              }
            }
          });
    }
  };

  const int workers = worker_count(spec, n_blocks);
  if (workers <= 1) {
    for (long b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (long b = w; b < n_blocks; b += workers) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  pairwise_merge(slots);
  const std::vector<double>& acc = slots.front();

  TwoTimeSample out;
  out.base_time = base * spec.dt;
  const double n = static_cast<double>(spec.n_trajectories);
  for (std::size_t k = 0; k < n_lags; ++k) {
    const double* a = acc.data() + k * 8;
    Eigen::Matrix2d m, se;
    for (int j = 0; j < 4; ++j) {
      const double mean = a[j] / n;
      const double var = std::max(0.0, a[4 + j] / n - mean * mean);
      m(j / 2, j % 2) = mean;
      se(j / 2, j % 2) = std::sqrt(var / n);
    }
    out.tau.push_back(lag_steps[k] * spec.dt);
    out.lag_cov.push_back(m);
    out.lag_cov_se.push_back(se);
  }
  return out;
}

Eigen::Matrix2d regression_prediction(const Eigen::Matrix2d& v_t,
                                      const DriftModel& drift, double tau) {
  if (drift.kind != DriftModel::Kind::RwaConstant) {
    throw NonPositiveInput(
        "regression prediction is defined for the constant drift");
  }
  // exp(A tau) with A = -g/2 I + chi sigma_x, A symmetric.
  const double decay = std::exp(-0.5 * drift.gamma * tau);
  const double ch = std::cosh(drift.chi_eps * tau);
  const double sh = std::sinh(drift.chi_eps * tau);
  Eigen::Matrix2d e;
  e << ch, sh, sh, ch;
  return v_t * (decay * e);
}

}  // namespace casiphon
