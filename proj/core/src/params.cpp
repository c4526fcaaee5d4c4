#include "casiphon/params.hpp"

#include <cmath>
#include <limits>

#include "casiphon/constants.hpp"
#include "casiphon/errors.hpp"

namespace casiphon {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw NonPositiveInput(std::string(name) + " must be strictly positive");
  }
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(cavity_length, "cavity_length");
  require_positive(mirror_mass, "mirror_mass");
  require_positive(mech_freq, "mech_freq");
  require_positive(mech_damping, "mech_damping");
  require_positive(cavity_decay, "cavity_decay");
  require_positive(laser_freq, "laser_freq");
  require_positive(laser_power, "laser_power");
  if (!(single_photon_coupling >= 0.0)) {
    throw NonPositiveInput("single_photon_coupling must be >= 0");
  }
  if (!(modulation_depth >= 0.0 && modulation_depth < 1.0)) {
    throw NonPositiveInput("modulation_depth must lie in [0,1)");
  }
  if (detuning == 0.0 || !std::isfinite(detuning)) {
    throw ZeroDetuning("detuning must be nonzero and finite");
  }
  if (bath_occupation.has_value() == bath_temperature.has_value()) {
    throw NonPositiveInput(
        "exactly one of bath_occupation / bath_temperature must be supplied");
  }
  if (bath_occupation && !(*bath_occupation >= 0.0)) {
    throw NonPositiveOccupation("bath_occupation must be >= 0");
  }
  if (bath_temperature && !(*bath_temperature > 0.0)) {
    throw NonPositiveTemperature("bath_temperature must be > 0");
  }
}

double bath_occupation_from_temperature(double temperature_k, double mech_freq) {
  if (!(temperature_k > 0.0)) {
    throw NonPositiveTemperature("temperature must be > 0");
  }
  require_positive(mech_freq, "mech_freq");
  const double x = constants::hbar * mech_freq / (constants::k_boltzmann * temperature_k);
  // expm1 keeps the high-temperature tail accurate; overflow at tiny T gives 0.
  return 1.0 / std::expm1(x);
}

double temperature_from_occupation(double occupation, double mech_freq) {
  if (!(occupation > 0.0)) {
    throw NonPositiveOccupation("occupation must be > 0");
  }
  require_positive(mech_freq, "mech_freq");
  return constants::hbar * mech_freq /
         (constants::k_boltzmann * std::log1p(1.0 / occupation));
}

DerivedParams derive(const PhysicalParams& p) {
  p.validate();

  DerivedParams d;
  d.mech_damping = p.mech_damping;
  d.mech_freq = p.mech_freq;
  d.detuning = p.detuning;
  d.bath_occupation = p.bath_occupation
                          ? *p.bath_occupation
                          : bath_occupation_from_temperature(*p.bath_temperature,
                                                             p.mech_freq);

  d.drive_amplitude = std::sqrt(p.cavity_decay * p.laser_power /
                                (constants::hbar * p.laser_freq));
  // Real-magnitude convention for the steady field; the phase is dropped.
  d.steady_field = d.drive_amplitude /
                   std::sqrt(0.25 * p.cavity_decay * p.cavity_decay +
                             p.detuning * p.detuning);
  d.linearized_coupling = p.single_photon_coupling * d.steady_field;
  d.nonlinear_gain =
      d.linearized_coupling * d.linearized_coupling / p.detuning;
  d.modulated_gain = p.modulation_depth * d.nonlinear_gain;
  d.control = d.modulated_gain / p.mech_damping;
  d.noise_leak = (d.linearized_coupling / p.detuning) *
                 std::sqrt(p.cavity_decay / p.mech_damping);
  d.noise_factor =
      1.0 + 2.0 * d.noise_leak * d.noise_leak / (1.0 + 2.0 * d.bath_occupation);
  d.shifted_freq = p.mech_freq - 2.0 * d.nonlinear_gain;
  d.modulation_freq = 2.0 * d.shifted_freq;
  d.lambda1 = -0.5 * p.mech_damping - d.modulated_gain;
  d.lambda2 = -0.5 * p.mech_damping + d.modulated_gain;
  d.zero_point = std::sqrt(constants::hbar / (2.0 * p.mirror_mass * p.mech_freq));
  d.reference_power = constants::hbar * p.laser_freq * p.detuning * p.detuning /
                      p.cavity_decay;
  d.free_spectral_range = constants::pi * constants::c_light / (2.0 * p.cavity_length);
  d.finesse = constants::pi * constants::c_light /
              (2.0 * p.cavity_decay * p.cavity_length);
  return d;
}

double s_epsilon_from_power(const PhysicalParams& p) {
  p.validate();
  // Same quantity as derive().control assembled in one expression from the
  // raw drive power, bypassing the E_L -> alpha_ss -> g -> chi chain.
  const double g0_sq = p.single_photon_coupling * p.single_photon_coupling;
  const double lorentz = 0.25 * p.cavity_decay * p.cavity_decay +
                         p.detuning * p.detuning;
  return p.modulation_depth * g0_sq * p.cavity_decay * p.laser_power /
         (constants::hbar * p.laser_freq * lorentz * p.detuning * p.mech_damping);
}

Stability classify_stability(double s_eps) {
  if (!std::isfinite(s_eps)) {
    throw NonPositiveInput("s_eps must be finite");
  }
  const double a = std::abs(s_eps);
  if (a < 0.5) return Stability::Stable;
  if (a == 0.5) return Stability::Marginal;
  return Stability::Unstable;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Marginal: return "marginal";
    default: return "unstable";
  }
}

int RegimeReport::warning_count() const {
  int n = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++n;
  }
  return n;
}

RegimeReport regime_report(const PhysicalParams& p, const DerivedParams& d,
                           const RegimeThresholds& th) {
  RegimeReport r;
  auto add = [&r](std::string name, double ratio, double threshold) {
    r.checks.push_back({std::move(name), ratio, threshold, ratio >= threshold});
  };
  const double abs_det = std::abs(p.detuning);
  add("far_detuned_vs_decay", abs_det / p.cavity_decay, th.much_greater);
  add("far_detuned_vs_mech_freq", abs_det / p.mech_freq, th.much_greater);
  add("unresolved_sideband", p.cavity_decay / p.mech_freq, th.at_least);
  add("fsr_margin", d.free_spectral_range / abs_det, th.much_greater);
  add("decay_vs_mech_damping", p.cavity_decay / p.mech_damping, th.much_greater);
  add("mechanical_quality", p.mech_freq / p.mech_damping, th.much_greater);
  if (p.single_photon_coupling > 0.0) {
    add("far_detuned_vs_coupling", abs_det / p.single_photon_coupling,
        th.much_greater);
    add("decay_vs_coupling", p.cavity_decay / p.single_photon_coupling,
        th.much_greater);
  } else {
    r.notes.push_back("single_photon_coupling is zero; coupling ratios skipped");
  }

  const double fsr_loop = constants::two_pi * constants::c_light / p.cavity_length;
  r.notes.push_back(
      "free_spectral_range uses pi*c/(2L) = kappa*finesse; the round-trip "
      "definition 2*pi*c/L evaluates to " +
      std::to_string(fsr_loop) + " rad/s (factor 4 larger)");
  return r;
}

}  // namespace casiphon
