// Batched evaluation kernels for the averaged-potential trigonometric
// polynomial.  A scalar reference implementation is always available; on
// x86-64 an AVX2+FMA variant is selected at runtime when the CPU supports
// it.  The two backends are equivalence-tested against each other.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace apl::kernels {

enum class Backend { scalar, avx2 };

/// Backend chosen at first use (CPU detection, overridable via the
/// APL_BACKEND environment variable: "scalar" or "avx2").
Backend active_backend();

/// True if the given backend can run on this machine/build.
bool backend_available(Backend b);

/// Force a specific backend (used by the equivalence tests).
/// Throws std::runtime_error if the backend is unavailable.
void force_backend(Backend b);

std::string_view backend_name(Backend b);

/// s[i] = sin(x[i]), c[i] = cos(x[i]).  Intended for |x| up to ~1e6;
/// all callers in this library stay within a few multiples of pi.
void sincos(std::span<const double> x, std::span<double> s, std::span<double> c);

/// out[i] = d^order/dphi^order of
///   v(phi) = -(a/2) cos 2phi + (c/2) sin 2phi - cos phi
/// for order in 0..4.
void potential_series(std::span<const double> phi, double a, double c,
                      int order, std::span<double> out);

}  // namespace apl::kernels
