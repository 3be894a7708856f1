#include "urdd/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace urdd {

namespace {

constexpr double kPi = std::numbers::pi;

double grid_value(double lo, double hi, int count, int index) {
  return lo + (hi - lo) * index / (count - 1);
}

void validate(const SweepGrid& grid) {
  if (!(grid.detuning_lo < grid.detuning_hi) || !(grid.amplitude_lo < grid.amplitude_hi)) {
    throw std::domain_error("SweepGrid: range lo must be below hi");
  }
  if (grid.nx < 2 || grid.ny < 2) throw std::domain_error("SweepGrid: need at least 2 samples per axis");
  if (grid.amplitude_lo < -1.0) throw std::domain_error("SweepGrid: amplitude error below -1 is unphysical");
}

struct PointEvaluator {
  std::vector<double> phases;
  int repetitions = 0;
  double tau = 0.0;
  Unitary2 target = Unitary2::Identity();
  IntegratorConfig icfg{};

  PointEvaluator(const PhaseSequence& seq, int total_pulses, double tau_over_t,
                 const IntegratorConfig& integrator)
      : phases(seq.phases_rad()), icfg(integrator) {
    if (seq.n < 1) throw std::domain_error("fidelity_map: empty sequence");
    if (tau_over_t < 0.0) throw std::domain_error("fidelity_map: negative pulse separation");
    if (total_pulses % seq.n != 0) {
      throw std::domain_error("fidelity_map: total pulse count must be a multiple of the sequence length");
    }
    repetitions = total_pulses / seq.n;
    tau = tau_over_t * kPi;  // Omega_0 = 1, T = pi
    const Unitary2 period = ideal_sequence_propagator(phases);
    target = period;
    for (int r = 1; r < repetitions; ++r) target = period * target;
  }

  double operator()(double det_over_rabi, double amplitude_error) const {
    DriveConfig drive;
    drive.shape = {PulseKind::Rectangular, kPi, 1.0, 0.0, 0.0};
    drive.amplitude_error = amplitude_error;
    drive.static_detuning = det_over_rabi;
    const Unitary2 base = pulse_propagator(drive, icfg);
    const Unitary2 half = free_propagator(drive.static_detuning, 0.5 * tau);
    Unitary2 period = Unitary2::Identity();
    for (double phi : phases) period = half * shift_drive_phase(base, phi) * half * period;
    Unitary2 total = period;
    for (int r = 1; r < repetitions; ++r) total = period * total;
    return fidelity(total, target).value;
  }
};

}  // namespace

double point_fidelity(const PhaseSequence& seq, int total_pulses, double det_over_rabi,
                      double amplitude_error, double tau_over_t, const IntegratorConfig& icfg) {
  return PointEvaluator(seq, total_pulses, tau_over_t, icfg)(det_over_rabi, amplitude_error);
}

MapResult fidelity_map(const PhaseSequence& seq, int total_pulses, const SweepGrid& grid,
                       double tau_over_t, int threads, const IntegratorConfig& icfg) {
  validate(grid);
  const PointEvaluator eval(seq, total_pulses, tau_over_t, icfg);

  MapResult map;
  map.grid = grid;
  map.sequence_name = seq.name;
  map.total_pulses = total_pulses;
  map.values.resize(static_cast<std::size_t>(grid.nx) * grid.ny);

  auto run_rows = [&](int row_lo, int row_hi) {
    for (int ix = row_lo; ix < row_hi; ++ix) {
      const double x = grid_value(grid.detuning_lo, grid.detuning_hi, grid.nx, ix);
      for (int iy = 0; iy < grid.ny; ++iy) {
        const double y = grid_value(grid.amplitude_lo, grid.amplitude_hi, grid.ny, iy);
        map.values[static_cast<std::size_t>(ix) * grid.ny + iy] = eval(x, y);
      }
    }
  };

  if (threads <= 1) {
    run_rows(0, grid.nx);
  } else {
    const int n_threads = std::min(threads, grid.nx);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    const int chunk = (grid.nx + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(grid.nx, lo + chunk);
      if (lo < hi) pool.emplace_back(run_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return map;
}

std::vector<ScalingFit> scaling_fit(std::span<const int> n_list, std::span<const double> p_list,
                                    ScalingPoint point) {
  std::vector<ScalingFit> fits;
  fits.reserve(n_list.size());
  for (int n : n_list) {
    const PhaseSequence seq = (n == 2) ? baseline(BaselineName::Cpmg) : symmetric_ur(n);
    const std::vector<double> phases = seq.phases_rad();
    const Unitary2 target = ideal_sequence_propagator(phases);

    std::vector<double> log_q;  // log(1 - p)
    std::vector<double> log_e;
    for (double p : p_list) {
      Unitary2 u = Unitary2::Identity();
      for (double phi : phases) {
        u = cycle_propagator_static({{p, point.alpha, 0.0}, point.delta}, phi) * u;
      }
      const double eps = fidelity(u, target).error;
      if (eps < 1e-14) continue;  // below double-precision resolution of 1 - F
      log_q.push_back(std::log(1.0 - p));
      log_e.push_back(std::log(eps));
    }

    ScalingFit fit;
    fit.n = n;
    fit.points_used = static_cast<int>(log_q.size());
    if (fit.points_used < 2) {
      fit.degenerate = true;
    } else {
      double mx = 0.0, my = 0.0;
      for (std::size_t i = 0; i < log_q.size(); ++i) {
        mx += log_q[i];
        my += log_e[i];
      }
      mx /= fit.points_used;
      my /= fit.points_used;
      double sxx = 0.0, sxy = 0.0;
      for (std::size_t i = 0; i < log_q.size(); ++i) {
        sxx += (log_q[i] - mx) * (log_q[i] - mx);
        sxy += (log_q[i] - mx) * (log_e[i] - my);
      }
      fit.slope = sxy / sxx;
    }
    fits.push_back(fit);
  }
  return fits;
}

std::vector<ComparisonRow> comparison_table(std::span<const PhaseSequence> sequences,
                                            int total_pulses, double det_over_rabi,
                                            double amplitude_error, double tau_over_t) {
  std::vector<ComparisonRow> rows;
  rows.reserve(sequences.size());
  for (const PhaseSequence& seq : sequences) {
    const double f = point_fidelity(seq, total_pulses, det_over_rabi, amplitude_error, tau_over_t);
    rows.push_back({seq.name, 1.0 - f});
  }
  return rows;
}

void write_map_csv(const MapResult& map, std::ostream& os) {
  os << "det_over_rabi,amp_error,fidelity\n";
  char buf[96];
  for (int ix = 0; ix < map.grid.nx; ++ix) {
    const double x = grid_value(map.grid.detuning_lo, map.grid.detuning_hi, map.grid.nx, ix);
    for (int iy = 0; iy < map.grid.ny; ++iy) {
      const double y = grid_value(map.grid.amplitude_lo, map.grid.amplitude_hi, map.grid.ny, iy);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", x, y, map.at(ix, iy));
      os << buf;
    }
  }
}

void write_map_pgm(const MapResult& map, std::ostream& os) {
  os << "P2\n" << map.grid.nx << " " << map.grid.ny << "\n65535\n";
  for (int iy = map.grid.ny - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < map.grid.nx; ++ix) {
      const double eps = std::max(1.0 - map.at(ix, iy), 1e-300);
      const double depth = std::min(12.0, std::max(0.0, -std::log10(eps)));
      const int pixel = static_cast<int>(std::lround(depth / 12.0 * 65535.0));
      os << pixel << (ix + 1 == map.grid.nx ? "\n" : " ");
    }
  }
}

}  // namespace urdd
