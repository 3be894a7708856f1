#include "urdd/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace urdd {

namespace {

/// exp(-i h dt) for the traceless Hermitian h = [[a, b], [conj(b), -a]]:
/// cos(theta) I - i sin(theta) (h / |h|), theta = |h| dt.
Unitary2 step_exponential(double a, Complex b, double dt) {
  const double w = std::sqrt(a * a + std::norm(b));
  const double theta = w * dt;
  if (w == 0.0) return Unitary2::Identity();
  const double c = std::cos(theta);
  const double s = std::sin(theta) / w;
  const Complex i(0.0, 1.0);
  Unitary2 u;
  u << c - i * s * a, -i * s * b, -i * s * std::conj(b), c + i * s * a;
  return u;
}

double envelope_at(const PulseShape& shape, double t) {
  switch (shape.kind) {
    case PulseKind::Rectangular:
    case PulseKind::ChirpedRectangular:
      return shape.peak_rabi;
    case PulseKind::Gaussian: {
      const double x = t - 0.5 * shape.duration;
      return shape.peak_rabi * std::exp(-x * x / (2.0 * shape.gaussian_width * shape.gaussian_width));
    }
  }
  return 0.0;
}

void validate(const DriveConfig& cfg, const IntegratorConfig& icfg) {
  if (!(cfg.shape.duration > 0.0)) throw std::domain_error("pulse_propagator: duration must be positive");
  if (cfg.shape.peak_rabi < 0.0) throw std::domain_error("pulse_propagator: peak Rabi frequency must be >= 0");
  if (cfg.shape.kind == PulseKind::Gaussian && !(cfg.shape.gaussian_width > 0.0)) {
    throw std::domain_error("pulse_propagator: Gaussian width must be positive");
  }
  if (1.0 + cfg.amplitude_error < 0.0) throw std::domain_error("pulse_propagator: amplitude error below -1");
  if (icfg.steps_per_pulse < 16) throw std::domain_error("pulse_propagator: need at least 16 steps");
}

}  // namespace

Unitary2 pulse_propagator(const DriveConfig& cfg, const IntegratorConfig& icfg) {
  validate(cfg, icfg);
  const double T = cfg.shape.duration;
  const double dt = T / icfg.steps_per_pulse;
  const Complex phase = std::polar(1.0, cfg.drive_phase);
  const double gain = 1.0 + cfg.amplitude_error;
  const bool chirped = cfg.shape.kind == PulseKind::ChirpedRectangular;

  Unitary2 u = Unitary2::Identity();
  for (int k = 0; k < icfg.steps_per_pulse; ++k) {
    const double t = (k + 0.5) * dt;  // midpoint sample
    const double omega = gain * envelope_at(cfg.shape, t);
    double det = cfg.static_detuning;
    if (chirped) det += cfg.shape.chirp_rate * (t - 0.5 * T);
    u = step_exponential(0.5 * det, 0.5 * omega * phase, dt) * u;
  }
  return u;
}

Unitary2 free_propagator(double detuning, double tau) {
  if (tau < 0.0) throw std::domain_error("free_propagator: negative duration");
  Unitary2 u = Unitary2::Zero();
  u(0, 0) = std::polar(1.0, -0.5 * detuning * tau);
  u(1, 1) = std::polar(1.0, 0.5 * detuning * tau);
  return u;
}

Unitary2 rect_oracle(double rabi, double detuning, double duration, double phase) {
  return step_exponential(0.5 * detuning, 0.5 * rabi * std::polar(1.0, phase), duration);
}

}  // namespace urdd
