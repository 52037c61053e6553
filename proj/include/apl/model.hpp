// Physical setup for a pendulum whose suspension point vibrates rapidly in
// the plane of motion, plus the time-averaged description of its dynamics.
//
// The pivot motion is xi = eps*Xi(omega*t/eps), eta = eps*Eta(omega*t/eps)
// with Xi, Eta 2*pi-periodic and zero-mean, stored as finite Fourier series.
// Averaging over the fast phase leaves a one-degree-of-freedom system whose
// potential, in units of m*g*l, is
//
//   v(phi) = -(a/2) cos 2phi + (c/2) sin 2phi - cos phi,
//
// where a = (B-A)/(g*l), c = C/(g*l) and A, B, C are the period averages of
// xidot^2/2, etadot^2/2 and xidot*etadot.  Everything downstream of the
// ingestion boundary works with the dimensionless pair (a, c).

#pragma once

#include <array>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

namespace apl {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Canonical angle representative in [-pi, pi).
double wrap_angle(double phi);

/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double x, double y);

struct PendulumParams {
  double m = 1.0;  // bob mass (kg)
  double l = 1.0;  // rod length (m)
  double g = 1.0;  // gravity (m/s^2)

  void validate() const;  // throws std::invalid_argument
  /// Momentum scale m*l^2*sqrt(g/l); divides p to make the kinetic term p^2/2.
  double momentum_scale() const;
};

/// One Fourier harmonic: coeff_cos*cos(k*tau) + coeff_sin*sin(k*tau).
struct Harmonic {
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

struct VibrationSpec {
  std::vector<Harmonic> xi;   // harmonics of Xi, index i holds k = i+1
  std::vector<Harmonic> eta;  // harmonics of Eta
  double epsilon = 0.01;
  double omega = 1.0;

  void validate() const;  // throws std::invalid_argument
  bool is_zero() const;
  double fast_period() const { return kTwoPi * epsilon / omega; }

  /// Pivot velocities at time t: xidot(t) = omega * Xi'(omega*t/epsilon).
  double xi_dot(double t) const;
  double eta_dot(double t) const;

  /// Parse `{"xi": [[cos,sin],...], "eta": [...], "epsilon": e, "omega": w}`.
  /// Harmonic index is the 1-based array position.
  static VibrationSpec from_json_text(const std::string& text);
  static VibrationSpec from_json_file(const std::string& path);
  std::string to_json_text() const;
};

struct AveragedCoefficients {
  double A = 0.0;  // average of xidot^2/2
  double B = 0.0;  // average of etadot^2/2
  double C = 0.0;  // average of xidot*etadot
};

struct ParameterPoint {
  double a = 0.0;  // (B-A)/(g*l)
  double c = 0.0;  // C/(g*l)
};

struct PhaseState {
  double phi = 0.0;  // pendulum angle from the downward vertical (rad)
  double p = 0.0;    // conjugate momentum (kg*m^2/s)
};

/// Exact averages from the Fourier coefficients (Parseval):
///   A = (omega^2/4) * sum k^2 (alpha_k^2 + beta_k^2)   over Xi,
/// analogously B, and C from the paired cross sums.
AveragedCoefficients averaged_coefficients(const VibrationSpec& spec);

/// Cross-check route: composite trapezoid average of the defining integrals
/// over one period of the fast phase.
AveragedCoefficients averaged_coefficients_quadrature(const VibrationSpec& spec,
                                                      int samples = 4096);

ParameterPoint dimensionless(const AveragedCoefficients& coeffs,
                             const PendulumParams& params);

/// v(phi) in units of m*g*l.
double averaged_potential(double phi, const ParameterPoint& pt);

/// d^order v / dphi^order for order in 1..4 (closed form).
/// Throws std::invalid_argument for other orders.
double potential_derivative(double phi, const ParameterPoint& pt, int order);

/// Exact Hamiltonian of the time-dependent problem.
double exact_hamiltonian(double t, const PhaseState& s,
                         const VibrationSpec& spec,
                         const PendulumParams& params);

/// Hamilton's equations (dphi/dt, dp/dt) for the exact Hamiltonian.
std::array<double, 2> exact_vector_field(double t, const PhaseState& s,
                                         const VibrationSpec& spec,
                                         const PendulumParams& params);

/// Fixed-format value with 12 significant digits, used for all numeric
/// CLI/CSV output so runs are byte-for-byte diffable.
std::string format_numeric(double x);

}  // namespace apl
