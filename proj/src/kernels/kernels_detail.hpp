#pragma once

#include <cstddef>

namespace apl::kernels::detail {

using SincosFn = void (*)(const double*, std::size_t, double*, double*);
using PotentialFn = void (*)(const double*, std::size_t, double, double, int,
                             double*);

struct Table {
  SincosFn sincos;
  PotentialFn potential;
};

Table scalar_table();
#if defined(APL_HAVE_AVX2)
Table avx2_table();
#endif

// The averaged potential and all four derivatives share one shape:
//   alpha*T2 + beta*U2 + gamma*T1
// where (T2,U2,T1) = (cos 2phi, sin 2phi, cos phi) for even orders and
// (sin 2phi, cos 2phi, sin phi) for odd orders.
struct TrigPoly {
  double alpha;
  double beta;
  double gamma;
  bool odd;
};

inline TrigPoly potential_poly(double a, double c, int order) {
  switch (order) {
    case 0: return {-0.5 * a, 0.5 * c, -1.0, false};
    case 1: return {a, c, 1.0, true};
    case 2: return {2.0 * a, -2.0 * c, 1.0, false};
    case 3: return {-4.0 * a, -4.0 * c, -1.0, true};
    default: return {-8.0 * a, 8.0 * c, -1.0, false};  // order 4
  }
}

}  // namespace apl::kernels::detail
