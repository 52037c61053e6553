#include "apl/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

namespace apl::kernels {

namespace {

struct State {
  detail::Table table;
  Backend backend;
};

bool avx2_supported() {
#if defined(APL_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

State make_state(Backend b) {
#if defined(APL_HAVE_AVX2)
  if (b == Backend::avx2) return {detail::avx2_table(), Backend::avx2};
#endif
  return {detail::scalar_table(), Backend::scalar};
}

State initial_state() {
  Backend b = avx2_supported() ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("APL_BACKEND")) {
    const std::string v(env);
    if (v == "scalar") b = Backend::scalar;
    else if (v == "avx2" && avx2_supported()) b = Backend::avx2;
  }
  return make_state(b);
}

State& state() {
  static State s = initial_state();
  return s;
}

}  // namespace

Backend active_backend() { return state().backend; }

bool backend_available(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && avx2_supported());
}

void force_backend(Backend b) {
  if (!backend_available(b))
    throw std::runtime_error("kernel backend not available on this machine");
  state() = make_state(b);
}

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void sincos(std::span<const double> x, std::span<double> s,
            std::span<double> c) {
  if (s.size() < x.size() || c.size() < x.size())
    throw std::invalid_argument("sincos: output spans too short");
  state().table.sincos(x.data(), x.size(), s.data(), c.data());
}

void potential_series(std::span<const double> phi, double a, double c,
                      int order, std::span<double> out) {
  if (order < 0 || order > 4)
    throw std::invalid_argument("potential_series: order must be in 0..4");
  if (out.size() < phi.size())
    throw std::invalid_argument("potential_series: output span too short");
  state().table.potential(phi.data(), phi.size(), a, c, order, out.data());
}

}  // namespace apl::kernels
