#include "urdd/dd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace urdd {

namespace {
constexpr double kPi = std::numbers::pi;
}

Unitary2 cycle_propagator_static(const CycleParams& c, double phi) {
  PulseParams p = c.pulse;
  p.alpha = wrap_angle(p.alpha + c.delta);
  p.beta = wrap_angle(p.beta + phi);
  return make_propagator(p);
}

Unitary2 cycle_propagator_integrated(const DriveConfig& drive, double tau, double phi,
                                     const IntegratorConfig& icfg) {
  if (tau < 0.0) throw std::domain_error("cycle_propagator_integrated: negative pulse separation");
  DriveConfig shifted = drive;
  shifted.drive_phase += phi;
  const Unitary2 half = free_propagator(drive.static_detuning, 0.5 * tau);
  return half * pulse_propagator(shifted, icfg) * half;
}

Unitary2 sequence_propagator(const SequenceRun& run) {
  if (run.repetitions < 1) throw std::domain_error("sequence_propagator: repetitions must be >= 1");
  const std::vector<double> phases = run.sequence.phases_rad();

  Unitary2 period = Unitary2::Identity();
  if (const auto* sc = std::get_if<StaticCycle>(&run.cycle)) {
    for (double phi : phases) period = cycle_propagator_static(sc->params, phi) * period;
  } else {
    const auto& ic = std::get<IntegratedCycle>(run.cycle);
    // One integration per run; phased cycles differ only by an exact
    // z-conjugation of the pulse propagator.
    const Unitary2 base = pulse_propagator(ic.drive, ic.integrator);
    const Unitary2 half = free_propagator(ic.drive.static_detuning, 0.5 * ic.tau);
    for (double phi : phases) period = half * shift_drive_phase(base, phi) * half * period;
  }

  Unitary2 total = period;
  for (int r = 1; r < run.repetitions; ++r) total = period * total;
  return total;
}

double sequence_duration(const SequenceRun& run) {
  double cycle = 0.0;
  if (const auto* sc = std::get_if<StaticCycle>(&run.cycle)) {
    cycle = sc->tau + sc->pulse_duration;
  } else {
    const auto& ic = std::get<IntegratedCycle>(run.cycle);
    cycle = ic.tau + ic.drive.shape.duration;
  }
  return cycle * run.sequence.n;
}

Unitary2 ideal_sequence_propagator(std::span<const double> phases_rad) {
  Unitary2 u = Unitary2::Identity();
  for (double phi : phases_rad) u = make_propagator({1.0, 0.0, phi}) * u;
  return u;
}

Unitary2 target_propagator(int n, double phi2, double phi_tilde) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("target_propagator: even cycle count >= 2 required");
  std::vector<double> phases;
  if (n == 2) {
    phases = {phi_tilde, phi2 + phi_tilde};
  } else {
    const double big_phi = ur_big_phi(n, +1).radians();
    phases.reserve(n);
    for (int k = 1; k <= n; ++k) {
      phases.push_back(0.5 * (k - 1) * (k - 2) * big_phi + (k - 1) * phi2 + phi_tilde);
    }
  }
  return ideal_sequence_propagator(phases);
}

namespace {

// The raw series value can reach 2; the trace fidelity is |1 - eps_raw|,
// so the fidelity error folds back as 2 - eps_raw past 1. The branch keeps
// small values exact where 1 - |1 - eps| would quantize them near 1e-16.
double folded_error(double eps_raw) {
  const double eps = eps_raw <= 1.0 ? eps_raw : 2.0 - eps_raw;
  return std::max(0.0, eps);
}

}  // namespace

double analytic_error_ur(int n, double p, double alpha, double delta, double phi2) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("analytic_error_ur: even cycle count >= 4 required");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("analytic_error_ur: p must lie in [0, 1]");
  const double s = std::sin(0.5 * n * (alpha + delta - 0.5 * kPi - 0.5 * phi2));
  return folded_error(2.0 * std::pow(1.0 - p, 0.5 * n) * s * s);
}

double analytic_error_cpmg(double p, double alpha, double delta, double phi2) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("analytic_error_cpmg: p must lie in [0, 1]");
  const double c = std::cos(alpha + delta - 0.5 * phi2);
  return folded_error(2.0 * (1.0 - p) * c * c);
}

}  // namespace urdd
