#include "urdd/ensemble.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace urdd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRabi = 2 * kPi * 50e3;     // rad/s
constexpr double kPulseT = 1e-5;             // pi / kRabi
constexpr double kTau = 40e-6;
constexpr double kT2 = 500e-6;
const double kDetuningSigma = std::numbers::sqrt2 / 13e-6;

EnsembleSpec memory_regime_spec(int n_qubits, std::uint64_t seed) {
  EnsembleSpec spec;
  spec.n_qubits = n_qubits;
  spec.detuning_sigma = kDetuningSigma;
  spec.rabi_spread = 0.1;
  spec.t2 = kT2;
  spec.seed = seed;
  return spec;
}

SequenceRun integrated_run(PhaseSequence seq, double drive_phase = 0.0) {
  SequenceRun run;
  run.sequence = std::move(seq);
  IntegratedCycle cycle;
  cycle.drive.shape = {PulseKind::Rectangular, kPulseT, kRabi, 0.0, 0.0};
  cycle.drive.drive_phase = drive_phase;
  cycle.tau = kTau;
  run.cycle = cycle;
  return run;
}

}  // namespace

TEST_CASE("sampling is deterministic in the seed and order-independent") {
  const EnsembleSpec spec = memory_regime_spec(500, 99);
  const auto a = sample_ensemble(spec);
  const auto b = sample_ensemble(spec);
  REQUIRE(a.size() == 500);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].detuning == b[k].detuning);
    CHECK(a[k].amplitude_error == b[k].amplitude_error);
  }

  EnsembleSpec other = spec;
  other.seed = 100;
  const auto c = sample_ensemble(other);
  CHECK(c[0].detuning != a[0].detuning);
}

TEST_CASE("zero spreads collapse the ensemble to one qubit") {
  EnsembleSpec spec = memory_regime_spec(100, 7);
  spec.detuning_sigma = 0.0;
  spec.rabi_spread = 0.0;
  spec.rabi_offset = 0.03;
  for (const QubitSample& q : sample_ensemble(spec)) {
    CHECK(q.detuning == 0.0);
    CHECK(q.amplitude_error == doctest::Approx(0.03));
  }
}

TEST_CASE("sampled detunings average out") {
  EnsembleSpec spec = memory_regime_spec(4000, 3);
  spec.detuning_sigma = 1.0;
  double mean = 0.0;
  for (const QubitSample& q : sample_ensemble(spec)) mean += q.detuning;
  mean /= spec.n_qubits;
  CHECK(std::abs(mean) < 5.0 / std::sqrt(4000.0));

  // amplitude errors stay inside the +-3 sigma truncation around the offset
  spec.rabi_offset = 0.05;
  for (const QubitSample& q : sample_ensemble(spec)) {
    CHECK(q.amplitude_error <= 0.05 + 3 * spec.rabi_spread + 1e-12);
    CHECK(q.amplitude_error >= 0.05 - 3 * spec.rabi_spread - 1e-12);
  }
}

TEST_CASE("perfect pulses leave only the T2 factor") {
  EnsembleSpec spec = memory_regime_spec(200, 5);
  spec.detuning_sigma = 0.0;
  spec.rabi_spread = 0.0;
  const double t = 80 * (kPulseT + kTau);
  const double proxy = storage_proxy(spec, integrated_run(symmetric_ur(10)), t);
  CHECK(std::abs(proxy - std::exp(-2 * t / kT2)) < 1e-12);
}

TEST_CASE("free induction decay follows the Gaussian envelope") {
  EnsembleSpec spec = memory_regime_spec(20000, 2024);
  spec.rabi_spread = 0.0;
  spec.t2 = 1.0;  // make dephasing the only visible decay
  SequenceRun fid;
  fid.sequence.name = "free";

  for (double t : {6.5e-6, 13e-6}) {
    const double proxy = storage_proxy(spec, fid, t);
    const double s = kDetuningSigma * t;
    const double oracle = std::exp(-s * s) * std::exp(-2 * t / spec.t2);
    CHECK(std::abs(proxy - oracle) < 0.03);
  }
}

TEST_CASE("instantaneous ideal pulses refocus the inhomogeneous spread exactly") {
  EnsembleSpec spec = memory_regime_spec(10000, 31);
  spec.rabi_spread = 0.0;

  SequenceRun run;
  run.sequence = symmetric_ur(10);
  run.cycle = StaticCycle{{{1.0, 0.0, 0.0}, 0.0}, kTau, 0.0};

  const double t = 80 * kTau;
  const double proxy = storage_proxy(spec, run, t);
  const double ideal = std::exp(-2 * t / kT2);
  CHECK(std::abs(proxy - ideal) < 0.02 * ideal);  // exact refocusing at the period end
  CHECK(std::abs(proxy - ideal) < 1e-10);
}

TEST_CASE("proxy never increases with storage time for ideal pulses") {
  EnsembleSpec spec = memory_regime_spec(100, 8);
  spec.detuning_sigma = 0.0;
  spec.rabi_spread = 0.0;
  const SequenceRun run = integrated_run(baseline(BaselineName::Cpmg));
  double previous = 1.0;
  for (int cycles : {10, 20, 40, 80}) {
    const double t = cycles * (kPulseT + kTau);
    const double proxy = storage_proxy(spec, run, t);
    CHECK(proxy <= previous + 1e-15);
    previous = proxy;
  }
}

TEST_CASE("UR16 beats KDD-in-XY4 at short pulse separation") {
  EnsembleSpec spec = memory_regime_spec(2000, 12345);
  SequenceRun ur16 = integrated_run(symmetric_ur(16), kPi / 4);
  SequenceRun kdd = integrated_run(baseline(BaselineName::KddXy4), kPi / 4);
  const double tau_short = 5e-6;
  std::get<IntegratedCycle>(ur16.cycle).tau = tau_short;
  std::get<IntegratedCycle>(kdd.cycle).tau = tau_short;
  const double t = 80 * (kPulseT + tau_short);
  CHECK(storage_proxy(spec, ur16, t) > storage_proxy(spec, kdd, t));
}

TEST_CASE("efficiency grows with the UR order in the dephasing-dominated regime") {
  const EnsembleSpec spec = memory_regime_spec(2000, 12345);
  const double t = 80 * (kPulseT + kTau);
  double previous = 0.0;
  for (int n : {8, 10, 16}) {
    const double proxy = storage_proxy(spec, integrated_run(symmetric_ur(n), kPi / 4), t);
    CHECK(proxy > previous);
    previous = proxy;
  }
}

TEST_CASE("thread count does not change the result") {
  const EnsembleSpec spec = memory_regime_spec(300, 77);
  const SequenceRun run = integrated_run(symmetric_ur(8), kPi / 4);
  const double t = 16 * (kPulseT + kTau);
  const double serial = storage_proxy(spec, run, t, 1);
  const double threaded = storage_proxy(spec, run, t, 4);
  CHECK(serial == threaded);  // bit-identical by construction
}

TEST_CASE("window shorter than one period is rejected") {
  const EnsembleSpec spec = memory_regime_spec(10, 1);
  const SequenceRun run = integrated_run(symmetric_ur(10));
  CHECK_THROWS_AS(storage_proxy(spec, run, 3 * (kPulseT + kTau)), std::domain_error);
}

TEST_CASE("storage_efficiency lists every requested sequence") {
  const EnsembleSpec spec = memory_regime_spec(50, 4);
  const std::vector<SequenceRun> runs = {integrated_run(symmetric_ur(4)),
                                         integrated_run(baseline(BaselineName::Cpmg))};
  const double t = 8 * (kPulseT + kTau);
  const StorageResult result = storage_efficiency(spec, runs, t);
  REQUIRE(result.per_sequence.size() == 2);
  CHECK(result.per_sequence[0].first == "UR4");
  CHECK(result.per_sequence[1].first == "CPMG");
  CHECK(result.efficiency_proxy == result.per_sequence[0].second);
  for (const auto& [name, proxy] : result.per_sequence) {
    CHECK(proxy >= 0.0);
    CHECK(proxy <= 1.0);
  }
}
