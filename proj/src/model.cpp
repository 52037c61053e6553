#include "apl/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace apl {

double wrap_angle(double phi) {
  double x = std::remainder(phi, kTwoPi);
  if (x >= kPi) x -= kTwoPi;  // remainder may return exactly +pi
  return x;
}

double angle_distance(double x, double y) {
  return std::abs(std::remainder(x - y, kTwoPi));
}

void PendulumParams::validate() const {
  if (!(m > 0.0) || !(l > 0.0) || !(g > 0.0))
    throw std::invalid_argument("pendulum parameters must satisfy m,l,g > 0");
}

double PendulumParams::momentum_scale() const {
  return m * l * l * std::sqrt(g / l);
}

void VibrationSpec::validate() const {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("vibration spec: epsilon must be > 0");
  if (!(omega > 0.0))
    throw std::invalid_argument("vibration spec: omega must be > 0");
  for (const auto* coeffs : {&xi, &eta})
    for (const Harmonic& h : *coeffs)
      if (!std::isfinite(h.cos_coeff) || !std::isfinite(h.sin_coeff))
        throw std::invalid_argument("vibration spec: non-finite coefficient");
}

bool VibrationSpec::is_zero() const {
  for (const auto* coeffs : {&xi, &eta})
    for (const Harmonic& h : *coeffs)
      if (h.cos_coeff != 0.0 || h.sin_coeff != 0.0) return false;
  return true;
}

namespace {

// omega * d/dtau of sum_k (a_k cos k tau + b_k sin k tau) at tau = omega*t/eps
double series_velocity(const std::vector<Harmonic>& coeffs, double tau,
                       double omega) {
  double v = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    v += k * (-coeffs[i].cos_coeff * std::sin(k * tau) +
              coeffs[i].sin_coeff * std::cos(k * tau));
  }
  return omega * v;
}

}  // namespace

double VibrationSpec::xi_dot(double t) const {
  return series_velocity(xi, omega * t / epsilon, omega);
}

double VibrationSpec::eta_dot(double t) const {
  return series_velocity(eta, omega * t / epsilon, omega);
}

AveragedCoefficients averaged_coefficients(const VibrationSpec& spec) {
  spec.validate();
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  const std::size_t n = std::max(spec.xi.size(), spec.eta.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double k2 = static_cast<double>((i + 1) * (i + 1));
    const Harmonic hx = i < spec.xi.size() ? spec.xi[i] : Harmonic{};
    const Harmonic hy = i < spec.eta.size() ? spec.eta[i] : Harmonic{};
    sxx += k2 * (hx.cos_coeff * hx.cos_coeff + hx.sin_coeff * hx.sin_coeff);
    syy += k2 * (hy.cos_coeff * hy.cos_coeff + hy.sin_coeff * hy.sin_coeff);
    sxy += k2 * (hx.cos_coeff * hy.cos_coeff + hx.sin_coeff * hy.sin_coeff);
  }
  const double w2 = spec.omega * spec.omega;
  return {0.25 * w2 * sxx, 0.25 * w2 * syy, 0.5 * w2 * sxy};
}

AveragedCoefficients averaged_coefficients_quadrature(const VibrationSpec& spec,
                                                      int samples) {
  spec.validate();
  if (samples < 2)
    throw std::invalid_argument("quadrature needs at least 2 samples");
  // trapezoid rule on a periodic integrand == equal-weight sum
  double A = 0.0, B = 0.0, C = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double tau = kTwoPi * i / samples;
    const double xd = series_velocity(spec.xi, tau, spec.omega);
    const double yd = series_velocity(spec.eta, tau, spec.omega);
    A += 0.5 * xd * xd;
    B += 0.5 * yd * yd;
    C += xd * yd;
  }
  return {A / samples, B / samples, C / samples};
}

ParameterPoint dimensionless(const AveragedCoefficients& coeffs,
                             const PendulumParams& params) {
  params.validate();
  const double gl = params.g * params.l;
  return {(coeffs.B - coeffs.A) / gl, coeffs.C / gl};
}

double averaged_potential(double phi, const ParameterPoint& pt) {
  return -0.5 * pt.a * std::cos(2.0 * phi) + 0.5 * pt.c * std::sin(2.0 * phi) -
         std::cos(phi);
}

double potential_derivative(double phi, const ParameterPoint& pt, int order) {
  const double s1 = std::sin(phi), c1 = std::cos(phi);
  const double s2 = std::sin(2.0 * phi), c2 = std::cos(2.0 * phi);
  switch (order) {
    case 1: return pt.a * s2 + pt.c * c2 + s1;
    case 2: return 2.0 * pt.a * c2 - 2.0 * pt.c * s2 + c1;
    case 3: return -4.0 * pt.a * s2 - 4.0 * pt.c * c2 - s1;
    case 4: return -8.0 * pt.a * c2 + 8.0 * pt.c * s2 - c1;
    default:
      throw std::invalid_argument("potential_derivative: order must be 1..4");
  }
}

double exact_hamiltonian(double t, const PhaseState& s,
                         const VibrationSpec& spec,
                         const PendulumParams& params) {
  const double w = spec.xi_dot(t) * std::cos(s.phi) +
                   spec.eta_dot(t) * std::sin(s.phi);
  const double ml2 = params.m * params.l * params.l;
  return 0.5 * (s.p * s.p / ml2 - 2.0 * s.p * w / params.l + params.m * w * w) -
         params.m * params.g * params.l * std::cos(s.phi);
}

std::array<double, 2> exact_vector_field(double t, const PhaseState& s,
                                         const VibrationSpec& spec,
                                         const PendulumParams& params) {
  const double xd = spec.xi_dot(t);
  const double yd = spec.eta_dot(t);
  const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
  const double w = xd * cphi + yd * sphi;
  const double w_phi = -xd * sphi + yd * cphi;
  const double ml2 = params.m * params.l * params.l;
  const double phidot = s.p / ml2 - w / params.l;
  const double pdot = (s.p / params.l - params.m * w) * w_phi -
                      params.m * params.g * params.l * sphi;
  return {phidot, pdot};
}

namespace {

Harmonic parse_harmonic(const nlohmann::json& item, const char* field,
                        std::size_t index) {
  if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
      !item[1].is_number()) {
    std::ostringstream msg;
    msg << "vibration spec: " << field << "[" << index
        << "] must be a [cos, sin] number pair";
    throw std::invalid_argument(msg.str());
  }
  return {item[0].get<double>(), item[1].get<double>()};
}

std::vector<Harmonic> parse_harmonics(const nlohmann::json& doc,
                                      const char* field) {
  std::vector<Harmonic> out;
  if (!doc.contains(field)) return out;
  const auto& arr = doc.at(field);
  if (!arr.is_array())
    throw std::invalid_argument(std::string("vibration spec: ") + field +
                                " must be an array of [cos, sin] pairs");
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_harmonic(arr[i], field, i));
  return out;
}

}  // namespace

VibrationSpec VibrationSpec::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("vibration spec: ") + e.what());
  }
  VibrationSpec spec;
  spec.xi = parse_harmonics(doc, "xi");
  spec.eta = parse_harmonics(doc, "eta");
  if (doc.contains("epsilon")) {
    if (!doc["epsilon"].is_number())
      throw std::invalid_argument("vibration spec: epsilon must be a number");
    spec.epsilon = doc["epsilon"].get<double>();
  }
  if (doc.contains("omega")) {
    if (!doc["omega"].is_number())
      throw std::invalid_argument("vibration spec: omega must be a number");
    spec.omega = doc["omega"].get<double>();
  }
  spec.validate();
  return spec;
}

VibrationSpec VibrationSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open vibration spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string VibrationSpec::to_json_text() const {
  nlohmann::json doc;
  auto dump = [](const std::vector<Harmonic>& hs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Harmonic& h : hs) arr.push_back({h.cos_coeff, h.sin_coeff});
    return arr;
  };
  doc["xi"] = dump(xi);
  doc["eta"] = dump(eta);
  doc["epsilon"] = epsilon;
  doc["omega"] = omega;
  return doc.dump();
}

std::string format_numeric(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace apl
