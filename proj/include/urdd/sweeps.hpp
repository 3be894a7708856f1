#pragma once

#include "urdd/dd.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace urdd {

/// 2D error grid in reduced units: detuning in units of Omega_0 on one axis,
/// relative amplitude error on the other.
struct SweepGrid {
  double detuning_lo = -0.5;
  double detuning_hi = 0.5;
  double amplitude_lo = -0.5;
  double amplitude_hi = 0.5;
  int nx = 101;  // detuning samples
  int ny = 101;  // amplitude samples
};

struct MapResult {
  SweepGrid grid;
  std::string sequence_name;
  int total_pulses = 0;
  std::vector<double> values;  // fidelity, row-major: detuning index outer

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * grid.ny + iy]; }
};

/// Fidelity of the repeated sequence vs the repeated ideal target at every
/// grid point, rectangular pulses with T = pi/Omega_0 and separation
/// tau = tau_over_t * T. total_pulses must be a multiple of the sequence
/// length. Points are independent; `threads` only splits the work.
MapResult fidelity_map(const PhaseSequence& seq, int total_pulses, const SweepGrid& grid,
                       double tau_over_t, int threads = 1, const IntegratorConfig& icfg = {});

/// Single grid-point evaluation used by fidelity_map and comparison_table.
double point_fidelity(const PhaseSequence& seq, int total_pulses, double det_over_rabi,
                      double amplitude_error, double tau_over_t, const IntegratorConfig& icfg = {});

struct ScalingPoint {
  double alpha = 0.1;
  double delta = 0.07;
};

struct ScalingFit {
  int n = 0;
  double slope = 0.0;
  int points_used = 0;
  bool degenerate = false;  // too few error values above the 1e-14 floor
};

/// Least-squares slope of log(fidelity error) vs log(1-p) of the composed
/// static-model propagator, one fit per sequence order. n = 2 is the
/// two-pulse echo; other n are symmetric UR sequences.
std::vector<ScalingFit> scaling_fit(std::span<const int> n_list, std::span<const double> p_list,
                                    ScalingPoint point);

struct ComparisonRow {
  std::string name;
  double infidelity = 0.0;
};

/// 1 - F per sequence at one error point, all repeated to total_pulses.
std::vector<ComparisonRow> comparison_table(std::span<const PhaseSequence> sequences,
                                            int total_pulses, double det_over_rabi,
                                            double amplitude_error, double tau_over_t);

/// CSV with header det_over_rabi,amp_error,fidelity; floats with 17
/// significant digits; rows ordered detuning-major.
void write_map_csv(const MapResult& map, std::ostream& os);

/// 16-bit P2 heatmap of -log10(1 - F) clamped to [0, 12]; top row is the
/// highest amplitude error.
void write_map_pgm(const MapResult& map, std::ostream& os);

}  // namespace urdd
