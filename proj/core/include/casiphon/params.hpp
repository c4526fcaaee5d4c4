#pragma once

#include <optional>
#include <string>
#include <vector>

namespace casiphon {

// Raw experimental inputs. All frequencies and rates are angular (rad/s).
struct PhysicalParams {
  double cavity_length = 0.0;        // L [m]
  double mirror_mass = 0.0;          // m [kg]
  double mech_freq = 0.0;            // omega_m [rad/s]
  double mech_damping = 0.0;         // gamma_m [rad/s]
  double cavity_decay = 0.0;         // kappa [rad/s]
  double single_photon_coupling = 0.0;  // g0 [rad/s], >= 0
  double laser_freq = 0.0;           // omega_L [rad/s]
  double detuning = 0.0;             // Delta_c [rad/s], signed, != 0
  double laser_power = 0.0;          // P_L [W]
  double modulation_depth = 0.0;     // epsilon, in [0,1)
  // Exactly one of the two bath fields must be set.
  std::optional<double> bath_occupation;   // nbar_m, >= 0
  std::optional<double> bath_temperature;  // T [K], > 0

  // Throws NonPositiveInput / ZeroDetuning on violation.
  void validate() const;
};

// Full derived symbol set used by the closed forms downstream.
struct DerivedParams {
  double drive_amplitude = 0.0;      // E_L [rad/s]
  double steady_field = 0.0;         // alpha_ss (real magnitude)
  double linearized_coupling = 0.0;  // g = g0 alpha_ss [rad/s]
  double nonlinear_gain = 0.0;       // chi_0 = g^2/Delta_c [rad/s], signed with detuning
  double modulated_gain = 0.0;       // chi_eps = eps chi_0 [rad/s]
  double control = 0.0;              // s_eps = chi_eps/gamma_m, signed
  double noise_leak = 0.0;           // xi = (g/Delta_c) sqrt(kappa/gamma_m), signed
  double noise_factor = 1.0;         // C = 1 + 2 xi^2/(1+2 nbar_m)
  double shifted_freq = 0.0;         // Omega_m = omega_m - 2 chi_0 [rad/s]
  double modulation_freq = 0.0;      // Omega = 2 Omega_m [rad/s]
  double lambda1 = 0.0;              // -gamma_m (1+2 s_eps)/2 [rad/s]
  double lambda2 = 0.0;              // -gamma_m (1-2 s_eps)/2 [rad/s]
  double zero_point = 0.0;           // x_zpf [m]
  double reference_power = 0.0;      // P0 = hbar omega_L Delta_c^2/kappa [W]
  double free_spectral_range = 0.0;  // FSR = pi c/(2 L) [rad/s]
  double finesse = 0.0;              // pi c/(2 kappa L)
  double bath_occupation = 0.0;      // nbar_m
  double mech_damping = 0.0;         // gamma_m carried along [rad/s]
  double mech_freq = 0.0;            // omega_m carried along [rad/s]
  double detuning = 0.0;             // Delta_c carried along [rad/s]
};

enum class Stability { Stable, Marginal, Unstable };

struct RegimeCheck {
  std::string name;
  double ratio = 0.0;
  double threshold = 0.0;
  bool pass = false;  // false => warn
};

struct RegimeReport {
  std::vector<RegimeCheck> checks;
  std::vector<std::string> notes;
  int warning_count() const;
};

struct RegimeThresholds {
  double much_greater = 10.0;  // ratio for every ">>" inequality
  double at_least = 1.0;       // ratio for plain ">=" (unresolved sideband)
};

// nbar_m = 1/(exp(hbar omega_m/kB T) - 1)
double bath_occupation_from_temperature(double temperature_k, double mech_freq);
// Inverse map, T = hbar omega_m/(kB ln(1+1/n))
double temperature_from_occupation(double occupation, double mech_freq);

// Parameter chain of the dispersive model; pure, deterministic.
DerivedParams derive(const PhysicalParams& p);

// s_eps recomputed from the drive power without going through the
// alpha_ss/g/chi_0 intermediates; must agree with derive().control.
double s_epsilon_from_power(const PhysicalParams& p);

Stability classify_stability(double s_eps);
const char* to_string(Stability s);

RegimeReport regime_report(const PhysicalParams& p, const DerivedParams& d,
                           const RegimeThresholds& thresholds = {});

}  // namespace casiphon
