#include "urdd/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace urdd {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kUnitaryTol = 1e-8;
}  // namespace

double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

double unitarity_defect(const Unitary2& u) {
  const Unitary2 d = u * u.adjoint() - Unitary2::Identity();
  return d.cwiseAbs().maxCoeff();
}

Unitary2 make_propagator(const PulseParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::domain_error("make_propagator: p must lie in [0, 1]");
  }
  const double c = std::sqrt(1.0 - params.p);
  const double s = std::sqrt(params.p);
  const Complex ea = std::polar(1.0, params.alpha);
  const Complex eb = std::polar(1.0, params.beta);
  Unitary2 u;
  u << c * ea, s * eb, -s * std::conj(eb), c * std::conj(ea);
  return u;
}

PulseParams apply_phase_shift(PulseParams params, double phi) {
  params.beta = wrap_angle(params.beta + phi);
  return params;
}

Unitary2 shift_drive_phase(const Unitary2& u, double phi) {
  const Complex z = std::polar(1.0, phi);
  Unitary2 v = u;
  v(0, 1) *= z;
  v(1, 0) *= std::conj(z);
  return v;
}

ExtractedParams extract_params(const Unitary2& u) {
  if (unitarity_defect(u) > kUnitaryTol) {
    throw std::domain_error("extract_params: input is not unitary");
  }
  // det(U) = e^{2ig}; principal half-angle, tie at det = -1 resolved to +pi/2
  double g = 0.5 * std::arg(u.determinant());
  if (g <= -0.5 * kPi) g += kPi;
  const Unitary2 v = std::polar(1.0, -g) * u;

  ExtractedParams out;
  out.global_phase = g;
  double p = std::norm(v(0, 1));
  p = std::min(1.0, std::max(0.0, p));
  out.params.p = p;
  out.beta_degenerate = p < 1e-14;
  out.alpha_degenerate = 1.0 - p < 1e-14;
  out.params.alpha = out.alpha_degenerate ? 0.0 : std::arg(v(0, 0));
  out.params.beta = out.beta_degenerate ? 0.0 : std::arg(v(0, 1));
  return out;
}

Unitary2 compose(std::span<const Unitary2> factors) {
  if (factors.empty()) throw std::domain_error("compose: empty factor list");
  Unitary2 u = Unitary2::Identity();
  for (const Unitary2& f : factors) u = f * u;
  return u;
}

FidelityResult fidelity(const Unitary2& u, const Unitary2& target) {
  if (unitarity_defect(u) > kUnitaryTol || unitarity_defect(target) > kUnitaryTol) {
    throw std::domain_error("fidelity: arguments must be unitary");
  }
  FidelityResult r;
  // rounding can push |Tr|/2 a few ulp past 1
  r.value = std::min(1.0, 0.5 * std::abs((target.adjoint() * u).trace()));
  r.error = 1.0 - r.value;
  return r;
}

}  // namespace urdd
