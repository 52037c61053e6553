// Scalar reference kernels.  These define the semantics the SIMD variants
// must reproduce.

#include <cmath>

#include "kernels_detail.hpp"

namespace apl::kernels::detail {

namespace {

void sincos_scalar(const double* x, std::size_t n, double* s, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

void potential_scalar(const double* phi, std::size_t n, double a, double c,
                      int order, double* out) {
  const TrigPoly poly = potential_poly(a, c, order);
  for (std::size_t i = 0; i < n; ++i) {
    const double s1 = std::sin(phi[i]);
    const double c1 = std::cos(phi[i]);
    // double-angle identities keep both backends on the same formula
    const double s2 = 2.0 * s1 * c1;
    const double c2 = (c1 - s1) * (c1 + s1);
    out[i] = poly.odd ? poly.alpha * s2 + poly.beta * c2 + poly.gamma * s1
                      : poly.alpha * c2 + poly.beta * s2 + poly.gamma * c1;
  }
}

}  // namespace

Table scalar_table() { return Table{&sincos_scalar, &potential_scalar}; }

}  // namespace apl::kernels::detail
