#pragma once

#include "urdd/dd.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace urdd {

/// Inhomogeneously broadened qubit ensemble with a homogeneous T2 decay.
struct EnsembleSpec {
  int n_qubits = 1;
  double detuning_sigma = 0.0;  // Gaussian spread of the qubit offsets, rad/s
  double rabi_spread = 0.0;     // relative sigma of the Rabi frequency, truncated at +-3 sigma
  double rabi_offset = 0.0;     // mean relative amplitude error
  double drive_detuning = 0.0;  // common drive offset, rad/s
  double t2 = 1.0;              // seconds
  std::uint64_t seed = 0;
};

struct QubitSample {
  double detuning = 0.0;         // this qubit's offset, rad/s
  double amplitude_error = 0.0;  // relative Rabi error
};

struct StorageResult {
  double storage_time = 0.0;
  double efficiency_proxy = 0.0;  // first sequence's value
  std::vector<std::pair<std::string, double>> per_sequence;
};

/// Draws the per-qubit (detuning, amplitude error) pairs. Counter-based
/// derivation from (seed, qubit index): reproducible and independent of
/// evaluation order or thread count.
std::vector<QubitSample> sample_ensemble(const EnsembleSpec& spec);

/// Storage-efficiency proxy for one sequence template filling the storage
/// window: every qubit starts in (|0> + |1>)/sqrt(2), evolves through
/// floor(storage_time / period) repetitions (any remainder evolves freely),
/// and contributes its final coherence <sigma_-> to the ensemble mean m(t).
/// The proxy is |m(t)|^2 / |m(0)|^2 * exp(-2 t / T2).
///
/// A template whose sequence has no phases means free evolution for the
/// whole window (free-induction decay).
/// Throws std::domain_error if the window is shorter than one period.
double storage_proxy(const EnsembleSpec& spec, const SequenceRun& run_template,
                     double storage_time, int threads = 1);

/// storage_proxy over several sequence templates at one storage time.
StorageResult storage_efficiency(const EnsembleSpec& spec, std::span<const SequenceRun> runs,
                                 double storage_time, int threads = 1);

}  // namespace urdd
