#include "apl/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "apl/kernels.hpp"

namespace apl {

std::string_view to_string(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::centre: return "centre";
    case EquilibriumKind::saddle: return "saddle";
    default: return "degenerate";
  }
}

bool EquilibriumSet::has_degenerate() const {
  return std::any_of(points.begin(), points.end(), [](const Equilibrium& e) {
    return e.kind == EquilibriumKind::degenerate;
  });
}

std::vector<Equilibrium> EquilibriumSet::saddles() const {
  std::vector<Equilibrium> out;
  for (const Equilibrium& e : points)
    if (e.kind == EquilibriumKind::saddle) out.push_back(e);
  return out;
}

std::vector<Equilibrium> EquilibriumSet::centres() const {
  std::vector<Equilibrium> out;
  for (const Equilibrium& e : points)
    if (e.kind == EquilibriumKind::centre) out.push_back(e);
  return out;
}

std::string EquilibriumSet::to_json_text() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Equilibrium& e = points[i];
    if (i) out << ",";
    out << "{\"phi\":" << format_numeric(e.phi) << ",\"kind\":\""
        << to_string(e.kind) << "\",\"v\":" << format_numeric(e.v)
        << ",\"v2\":" << format_numeric(e.v2) << "}";
  }
  out << "]";
  return out.str();
}

namespace {

double dv(double phi, const ParameterPoint& pt) {
  return potential_derivative(phi, pt, 1);
}
double d2v(double phi, const ParameterPoint& pt) {
  return potential_derivative(phi, pt, 2);
}
double d3v(double phi, const ParameterPoint& pt) {
  return potential_derivative(phi, pt, 3);
}

EquilibriumKind kind_from_v2(double v2, double tol_deg) {
  if (v2 > tol_deg) return EquilibriumKind::centre;
  if (v2 < -tol_deg) return EquilibriumKind::saddle;
  return EquilibriumKind::degenerate;
}

Equilibrium make_point(double phi, const ParameterPoint& pt, double tol_deg) {
  const double v2 = d2v(phi, pt);
  return {wrap_angle(phi), kind_from_v2(v2, tol_deg),
          averaged_potential(phi, pt), v2};
}

// Bisection to near machine width, then a couple of guarded Newton steps.
double refine_bracket(double lo, double hi, double flo,
                      const ParameterPoint& pt) {
  for (int i = 0; i < 90; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = dv(mid, pt);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double f = dv(x, pt);
    const double df = d2v(x, pt);
    if (df == 0.0) break;
    const double step = f / df;
    if (!std::isfinite(step) || std::abs(step) > (hi - lo)) break;
    x -= step;
  }
  return x;
}

// Newton on v'' (the degenerate angle is a simple root of v'' whenever
// v''' != 0 there).
bool refine_tangency(double x0, const ParameterPoint& pt, double& out) {
  double x = x0;
  for (int i = 0; i < 40; ++i) {
    const double f = d2v(x, pt);
    const double df = d3v(x, pt);
    if (df == 0.0) return false;
    const double step = f / df;
    x -= step;
    if (std::abs(step) < 1e-14) {
      out = x;
      return true;
    }
  }
  return false;
}

}  // namespace

EquilibriumSet find_equilibria(const ParameterPoint& pt,
                               const EquilibriaOptions& opts) {
  if (!std::isfinite(pt.a) || !std::isfinite(pt.c))
    throw std::invalid_argument("find_equilibria: parameters must be finite");

  const int n = opts.scan_intervals;
  const double step = kTwoPi / n;
  std::vector<double> nodes(n + 1);
  for (int i = 0; i <= n; ++i) nodes[i] = -kPi + step * i;
  std::vector<double> f(n + 1);
  kernels::potential_series(nodes, pt.a, pt.c, 1, f);
  f[n] = f[0];  // periodic closure, avoids a stray sign at +pi

  std::vector<double> roots;

  // sign-change brackets
  for (int i = 0; i < n; ++i) {
    if (f[i] == 0.0) {
      roots.push_back(nodes[i]);
    } else if ((f[i] < 0.0) != (f[i + 1] < 0.0) && f[i + 1] != 0.0) {
      roots.push_back(refine_bracket(nodes[i], nodes[i + 1], f[i], pt));
    }
  }

  // tangency candidates: interior minima of |v'| that never cross zero can
  // hide a double root (on the degenerate curve) or a close pair inside one
  // scan interval
  for (int i = 0; i < n; ++i) {
    const double fm = std::abs(f[i]);
    const int prev = i == 0 ? n - 1 : i - 1;
    if (fm > opts.tangency_threshold) continue;
    if (fm > std::abs(f[prev]) || fm > std::abs(f[i + 1])) continue;
    double x;
    if (!refine_tangency(nodes[i], pt, x)) continue;
    if (angle_distance(x, nodes[i]) > step) continue;
    const double fx = dv(x, pt);
    if (std::abs(fx) < opts.tol_root) {
      roots.push_back(x);
    } else if ((fx < 0.0) != (f[i] < 0.0)) {
      // near-double pair straddling the |v'| minimum: bracket each side
      roots.push_back(refine_bracket(nodes[prev], x, f[prev], pt));
      roots.push_back(refine_bracket(x, nodes[i + 1], fx, pt));
    }
  }

  for (double& r : roots) r = wrap_angle(r);
  std::sort(roots.begin(), roots.end());

  // merge clusters (including across the +-pi seam); merged clusters are
  // re-polished onto the v''=0 point between the colliding roots
  std::vector<double> merged;
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i + 1;
    while (j < roots.size() && roots[j] - roots[j - 1] < opts.merge_radius) ++j;
    double x = roots[i + (j - 1 - i) / 2];
    if (j - i > 1) {
      double polished;
      if (refine_tangency(x, pt, polished)) x = polished;
    }
    merged.push_back(wrap_angle(x));
    i = j;
  }
  if (merged.size() >= 2 &&
      angle_distance(merged.front(), merged.back()) < opts.merge_radius) {
    merged.pop_back();
  }

  EquilibriumSet set;
  for (double r : merged) {
    if (std::abs(dv(r, pt)) >= opts.tol_root) continue;
    set.points.push_back(make_point(r, pt, opts.tol_deg));
  }
  std::sort(set.points.begin(), set.points.end(),
            [](const Equilibrium& x, const Equilibrium& y) {
              return x.phi < y.phi;
            });

  if (set.count() < 2 || set.count() > 4) {
    std::ostringstream msg;
    msg << "find_equilibria: found " << set.count() << " equilibria at (a,c)=("
        << pt.a << "," << pt.c << "), expected 2..4";
    throw std::runtime_error(msg.str());
  }
  return set;
}

EquilibriumSet closed_form_C0(double a) {
  const ParameterPoint pt{a, 0.0};
  const EquilibriaOptions opts;
  EquilibriumSet set;
  set.points.push_back(make_point(0.0, pt, opts.tol_deg));
  set.points.push_back(make_point(kPi, pt, opts.tol_deg));
  if (std::abs(a) > 0.5) {
    const double phi = std::acos(-1.0 / (2.0 * a));
    set.points.push_back(make_point(phi, pt, opts.tol_deg));
    set.points.push_back(make_point(-phi, pt, opts.tol_deg));
  }
  std::sort(set.points.begin(), set.points.end(),
            [](const Equilibrium& x, const Equilibrium& y) {
              return x.phi < y.phi;
            });
  return set;
}

EquilibriumSet closed_form_A_eq_B(double c) {
  if (c == 0.0) return closed_form_C0(0.0);
  const ParameterPoint pt{0.0, c};
  const EquilibriaOptions opts;
  const double disc = std::sqrt(1.0 + 8.0 * c * c);

  EquilibriumSet set;
  auto add_pair = [&](double s) {
    const double phi = std::asin(s);
    set.points.push_back(make_point(phi, pt, opts.tol_deg));
    set.points.push_back(make_point(kPi - phi, pt, opts.tol_deg));
  };

  add_pair((1.0 - disc) / (4.0 * c));  // always in (-1,0) or (0,1)

  const double splus = (1.0 + disc) / (4.0 * c);
  if (std::abs(c) > 1.0) {
    add_pair(splus);
  } else if (std::abs(c) == 1.0) {
    // boundary: the "+" branch root pair merges at +-pi/2
    set.points.push_back(make_point(std::asin(splus), pt, opts.tol_deg));
  }

  std::sort(set.points.begin(), set.points.end(),
            [](const Equilibrium& x, const Equilibrium& y) {
              return x.phi < y.phi;
            });
  return set;
}

EquilibriumKind classify(double phi, const ParameterPoint& pt,
                         const EquilibriaOptions& opts) {
  const double f = dv(phi, pt);
  if (std::abs(f) >= opts.tol_root) {
    std::ostringstream msg;
    msg << "classify: phi=" << phi << " is not an equilibrium (|v'|="
        << std::abs(f) << ")";
    throw std::invalid_argument(msg.str());
  }
  return kind_from_v2(d2v(phi, pt), opts.tol_deg);
}

}  // namespace apl
