// Partition of the (a, c) parameter plane: the closed curve of degenerate
// equilibria (with its two cusps), the heteroclinic ray {c = 0, a > 1/2},
// region classification by equilibrium count, and the numerical checks
// behind the bifurcation analysis.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apl/equilibria.hpp"
#include "apl/model.hpp"

namespace apl {

/// Point of the degenerate-equilibrium curve: for parameter phi_star,
///   a = cos^3(phi_star) - (3/2) cos(phi_star),   c = sin^3(phi_star).
/// The averaged potential at these parameters has v' = v'' = 0 at phi_star.
struct GammaPoint {
  double phi_star = 0.0;
  double a = 0.0;
  double c = 0.0;
};

enum class RegionLabel { I, II_pos, II_neg, GAMMA, HETEROCLINIC_RAY };

std::string_view to_string(RegionLabel label);

struct NondegeneracyReport {
  double phi_star = 0.0;
  double v3 = 0.0;                // third derivative at the equilibrium
  double transversal_deriv = 0.0; // derivative of v' along u_perp
  std::optional<double> v4_at_cusp;
};

GammaPoint gamma_point(double phi_star);

/// Tangent (da/dphi, dc/dphi) of the curve at phi_star.
std::array<double, 2> gamma_tangent(double phi_star);

/// Transversal direction u_perp = (3 sin^2 cos, 3 cos^2 sin - (3/2) sin);
/// unnormalized, vanishes at the cusps.
std::array<double, 2> gamma_normal(double phi_star);

/// Closed polyline sampling the curve over phi_star in [0, 2*pi]; returns
/// n+1 points with the last repeating the first (up to roundoff).
std::vector<GammaPoint> trace_gamma(int n);

/// Euclidean distance from pt to the curve in the (a, c) plane.
double distance_to_gamma(const ParameterPoint& pt);

/// Region of a parameter point.  Membership in I/II is decided by the
/// equilibrium count; the curve and the ray get a tolerance band (default
/// 1e-9 in (a, c)).
RegionLabel classify_region(const ParameterPoint& pt, double band = 1e-9);

/// Evaluates v''' and the u_perp-directional derivative of v' at the
/// degenerate equilibrium of gamma_point(phi_star); both equal 3*sin and
/// (3/2)*sin of phi_star at regular points.  At a cusp (sin phi_star = 0)
/// also evaluates v'''' (+3 at the left cusp phi_star = 0, -3 at the right).
NondegeneracyReport nondegeneracy_check(double phi_star);

/// v(saddle_1) - v(saddle_2) with the saddles ordered by increasing phi;
/// nullopt when the potential has fewer than two saddles.
std::optional<double> saddle_energy_gap(const ParameterPoint& pt,
                                        const EquilibriaOptions& opts = {});

struct SweepCell {
  double a = 0.0;
  double c = 0.0;
  RegionLabel label = RegionLabel::I;
  int equilibrium_count = 0;
};

struct SweepBox {
  double a_min = -2.0, a_max = 2.0;
  double c_min = -2.0, c_max = 2.0;
};

/// Classifies the centers of a resolution x resolution cell grid, sharded
/// over `workers` threads.  Output order is row-major in (c, a) regardless
/// of the worker count.
std::vector<SweepCell> classify_grid(const SweepBox& box, int resolution,
                                     int workers = 1);

std::string sweep_to_csv(const std::vector<SweepCell>& cells);
std::string sweep_to_json(const std::vector<SweepCell>& cells);
std::string gamma_to_csv(const std::vector<GammaPoint>& curve);

}  // namespace apl
