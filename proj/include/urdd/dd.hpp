#pragma once

#include "urdd/pulse.hpp"
#include "urdd/sequences.hpp"
#include "urdd/su2.hpp"

#include <span>
#include <variant>

namespace urdd {

/// Bare pulse parameters plus the half-period free-evolution phase
/// delta = -detuning * tau / 2, so one cycle is
/// U(phi) = make_propagator(p, alpha + delta, beta + phi).
struct CycleParams {
  PulseParams pulse;
  double delta = 0.0;
};

/// Static cycle with an explicit timing for runs that fill a storage window.
/// pulse_duration = 0 models instantaneous pulses.
struct StaticCycle {
  CycleParams params;
  double tau = 0.0;
  double pulse_duration = 0.0;
};

struct IntegratedCycle {
  DriveConfig drive;
  double tau = 0.0;
  IntegratorConfig integrator{};
};

/// A repeated DD sequence: N identical periods of the phase list.
struct SequenceRun {
  PhaseSequence sequence;
  int repetitions = 1;
  std::variant<StaticCycle, IntegratedCycle> cycle;
};

/// make_propagator(p, alpha + delta, beta + phi)
Unitary2 cycle_propagator_static(const CycleParams& c, double phi);

/// free(tau/2) * pulse(drive_phase + phi) * free(tau/2); the symmetric split
/// folds the free evolution into alpha as delta = -detuning * tau / 2 and a
/// global phase, leaving beta untouched.
Unitary2 cycle_propagator_integrated(const DriveConfig& drive, double tau, double phi,
                                     const IntegratorConfig& icfg = {});

/// Propagator of the whole run, cycles ordered first-acts-first.
Unitary2 sequence_propagator(const SequenceRun& run);

/// Wall-clock duration of one period of the run's sequence.
double sequence_duration(const SequenceRun& run);

/// p = 1 composition of ideal phased cycles, for any phase list.
Unitary2 ideal_sequence_propagator(std::span<const double> phases_rad);

/// Ideal-pulse target of a UR run: phases from the UR formula with the given
/// phi2, all offset by phi_tilde (the offset drops out of the composition).
/// n = 2 denotes the two-pulse (0, phi2) echo unit. Equals (-1)^(n/2) I for
/// symmetric sequences and a z-rotation by the phase-gate angle otherwise.
Unitary2 target_propagator(int n, double phi2, double phi_tilde = 0.0);

/// Exact fidelity error of a UR sequence in the static model,
///   eps_raw = 2 (1-p)^(n/2) sin^2[ n/2 (alpha + delta - pi/2 - phi2/2) ],
/// mapped to the trace fidelity as 1 - |1 - eps_raw|, which keeps the
/// result in [0, 1] and matches the composed propagator for every p.
double analytic_error_ur(int n, double p, double alpha, double delta, double phi2);

/// Two-cycle (CPMG-type) counterpart with
///   eps_raw = 2 (1-p) cos^2(alpha + delta - phi2/2).
double analytic_error_cpmg(double p, double alpha, double delta, double phi2);

}  // namespace urdd
