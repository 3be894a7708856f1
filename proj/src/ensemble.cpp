#include "urdd/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace urdd {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  // in (0, 1]
  return (static_cast<double>(splitmix64(state) >> 11) + 1.0) * 0x1p-53;
}

/// One Box-Muller pair from the qubit's private stream.
std::pair<double, double> normal_pair(std::uint64_t& state) {
  const double u1 = uniform01(state);
  const double u2 = uniform01(state);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

void validate(const EnsembleSpec& spec) {
  if (spec.n_qubits < 1) throw std::domain_error("EnsembleSpec: nQubits must be >= 1");
  if (!(spec.t2 > 0.0)) throw std::domain_error("EnsembleSpec: T2 must be positive");
  if (spec.detuning_sigma < 0.0) throw std::domain_error("EnsembleSpec: detuningSigma must be >= 0");
  if (spec.rabi_spread < 0.0) throw std::domain_error("EnsembleSpec: rabiSpread must be >= 0");
}

QubitSample draw_qubit(const EnsembleSpec& spec, int index) {
  std::uint64_t state = spec.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
  (void)splitmix64(state);  // decorrelate nearby indices
  const auto [z1, z2] = normal_pair(state);
  QubitSample q;
  q.detuning = spec.detuning_sigma * z1;
  q.amplitude_error = spec.rabi_offset + spec.rabi_spread * std::clamp(z2, -3.0, 3.0);
  return q;
}

Complex end_coherence(const EnsembleSpec& spec, const SequenceRun& run_template,
                      double storage_time, const QubitSample& q) {
  Unitary2 u = Unitary2::Identity();
  if (run_template.sequence.phases.empty()) {
    u = free_propagator(q.detuning, storage_time);
  } else {
    SequenceRun run = run_template;
    if (auto* sc = std::get_if<StaticCycle>(&run.cycle)) {
      sc->params.delta -= 0.5 * q.detuning * sc->tau;
    } else {
      auto& ic = std::get<IntegratedCycle>(run.cycle);
      ic.drive.static_detuning = q.detuning + spec.drive_detuning;
      ic.drive.amplitude_error += q.amplitude_error;
    }
    const double period = sequence_duration(run);
    run.repetitions = static_cast<int>(std::floor(storage_time / period + 1e-9));
    if (run.repetitions < 1) {
      throw std::domain_error("storage_proxy: storage time is shorter than one sequence period");
    }
    u = sequence_propagator(run);
    const double remainder = storage_time - run.repetitions * period;
    if (remainder > 1e-12 * storage_time) {
      // the free-evolution remainder sees the qubit offset only
      u = free_propagator(q.detuning, remainder) * u;
    }
  }
  const Eigen::Vector2cd psi0(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);
  const Eigen::Vector2cd psi = u * psi0;
  return std::conj(psi(0)) * psi(1);  // <sigma_->
}

}  // namespace

std::vector<QubitSample> sample_ensemble(const EnsembleSpec& spec) {
  validate(spec);
  std::vector<QubitSample> out(spec.n_qubits);
  for (int k = 0; k < spec.n_qubits; ++k) out[k] = draw_qubit(spec, k);
  return out;
}

double storage_proxy(const EnsembleSpec& spec, const SequenceRun& run_template,
                     double storage_time, int threads) {
  validate(spec);
  if (!(storage_time > 0.0)) throw std::domain_error("storage_proxy: storage time must be positive");

  const std::vector<QubitSample> qubits = sample_ensemble(spec);
  std::vector<Complex> coherence(qubits.size());

  // run the first qubit synchronously so configuration errors (window too
  // short, invalid drive) surface as exceptions, not thread terminations
  coherence[0] = end_coherence(spec, run_template, storage_time, qubits[0]);

  auto worker = [&](std::size_t lo, std::size_t hi, std::exception_ptr& error) {
    try {
      for (std::size_t k = lo; k < hi; ++k) {
        coherence[k] = end_coherence(spec, run_template, storage_time, qubits[k]);
      }
    } catch (...) {
      error = std::current_exception();
    }
  };
  if (threads <= 1 || qubits.size() < 3) {
    std::exception_ptr error;
    worker(1, qubits.size(), error);
    if (error) std::rethrow_exception(error);
  } else {
    const std::size_t n_threads = std::min<std::size_t>(threads, qubits.size() - 1);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_threads);
    pool.reserve(n_threads);
    const std::size_t chunk = (qubits.size() - 1 + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
      const std::size_t lo = 1 + t * chunk;
      const std::size_t hi = std::min(qubits.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi, std::ref(errors[t]));
    }
    for (auto& th : pool) th.join();
    for (const std::exception_ptr& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  // index-ordered reduction keeps the result independent of the thread count
  Complex mean(0.0, 0.0);
  for (const Complex& c : coherence) mean += c;
  mean /= static_cast<double>(coherence.size());

  const double ratio = std::norm(mean) / 0.25;  // |m(0)| = 1/2
  return ratio * std::exp(-2.0 * storage_time / spec.t2);
}

StorageResult storage_efficiency(const EnsembleSpec& spec, std::span<const SequenceRun> runs,
                                 double storage_time, int threads) {
  StorageResult result;
  result.storage_time = storage_time;
  result.per_sequence.reserve(runs.size());
  for (const SequenceRun& run : runs) {
    const double proxy = storage_proxy(spec, run, storage_time, threads);
    result.per_sequence.emplace_back(run.sequence.name, proxy);
  }
  if (!result.per_sequence.empty()) result.efficiency_proxy = result.per_sequence.front().second;
  return result;
}

}  // namespace urdd
