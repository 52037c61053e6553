// Equilibria of the averaged potential on the circle: a bracketing scan of
// v' with bisection/Newton polish, tangency recovery for double roots, and
// the closed-form special cases used as independent oracles.

#pragma once

#include <string>
#include <vector>

#include "apl/model.hpp"

namespace apl {

enum class EquilibriumKind { centre, saddle, degenerate };

std::string_view to_string(EquilibriumKind k);

struct Equilibrium {
  double phi = 0.0;  // in [-pi, pi)
  EquilibriumKind kind = EquilibriumKind::centre;
  double v = 0.0;   // potential value
  double v2 = 0.0;  // second derivative
};

struct EquilibriumSet {
  std::vector<Equilibrium> points;  // sorted by increasing phi

  int count() const { return static_cast<int>(points.size()); }
  bool has_degenerate() const;
  std::vector<Equilibrium> saddles() const;
  std::vector<Equilibrium> centres() const;
  std::string to_json_text() const;
};

struct EquilibriaOptions {
  int scan_intervals = 2048;
  double tol_root = 1e-10;           // |v'| bound for an accepted root
  double tol_deg = 1e-8;             // |v''| band for "degenerate"
  double merge_radius = 1e-6;        // roots closer than this merge (rad)
  double tangency_threshold = 1e-4;  // |v'| scan minima worth a second look
};

/// All roots of v' on [-pi, pi), classified by the sign of v''.
/// Throws std::runtime_error if the root count leaves {2, 3, 4}.
EquilibriumSet find_equilibria(const ParameterPoint& pt,
                               const EquilibriaOptions& opts = {});

/// Closed form on the axis c = 0: roots of sin(phi) * (2a cos(phi) + 1).
EquilibriumSet closed_form_C0(double a);

/// Closed form on the axis a = 0: sin(phi) = (1 +- sqrt(1+8c^2))/(4c).
/// The "-" branch always yields two roots; the "+" branch two more iff
/// |c| > 1.  c = 0 defers to closed_form_C0(0).
EquilibriumSet closed_form_A_eq_B(double c);

/// Classify a known equilibrium.  Throws std::invalid_argument when phi is
/// not a root of v' (|v'| >= tol_root).
EquilibriumKind classify(double phi, const ParameterPoint& pt,
                         const EquilibriaOptions& opts = {});

}  // namespace apl
