#pragma once

#include "urdd/su2.hpp"

namespace urdd {

enum class PulseKind { Rectangular, Gaussian, ChirpedRectangular };

/// Time-dependent Rabi envelope on [0, T]. The Gaussian is centered at T/2
/// and truncated at the interval ends; the chirped pulse sweeps its detuning
/// linearly through zero offset at T/2.
struct PulseShape {
  PulseKind kind = PulseKind::Rectangular;
  double duration = 0.0;        // T, seconds
  double peak_rabi = 0.0;       // Omega_0, rad/s
  double gaussian_width = 0.0;  // sigma, seconds (Gaussian only)
  double chirp_rate = 0.0;      // rad/s^2 (chirped only)
};

/// One physical pulse as applied to one qubit.
struct DriveConfig {
  PulseShape shape;
  double amplitude_error = 0.0;  // Omega(t) scaled by (1 + amplitude_error)
  double static_detuning = 0.0;  // qubit offset relative to the drive, rad/s
  double drive_phase = 0.0;      // radians
};

enum class IntegrationMethod { PiecewiseConstantExponential };

struct IntegratorConfig {
  int steps_per_pulse = 2000;  // >= 16
  IntegrationMethod method = IntegrationMethod::PiecewiseConstantExponential;
};

/// Time-ordered propagator of the pulse Hamiltonian
///   h(t) = [[ d(t)/2,            Omega(t) e^{+i phi}/2 ],
///           [ Omega(t) e^{-i phi}/2,          -d(t)/2 ]]
/// by piecewise-constant exponentials with midpoint sampling.
/// Unitary to ~1e-12 at the default step count.
Unitary2 pulse_propagator(const DriveConfig& cfg, const IntegratorConfig& icfg = {});

/// exp(-i detuning tau S_z) = diag(e^{-i detuning tau/2}, e^{+i detuning tau/2})
Unitary2 free_propagator(double detuning, double tau);

/// Closed-form propagator of a constant-Hamiltonian rectangular pulse;
/// independent reference for the integrator.
Unitary2 rect_oracle(double rabi, double detuning, double duration, double phase);

}  // namespace urdd
