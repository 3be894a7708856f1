#pragma once

#include "urdd/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace urdd {

enum class BaselineName { Cpmg, Xy4, Xy8, Kdd, KddXy4 };

/// Ordered pulse phases of one DD sequence period, as exact rational
/// multiples of pi. Conversion to radians happens at the simulation boundary.
struct PhaseSequence {
  std::string name;
  int n = 0;
  std::vector<RationalAngle> phases;
  RationalAngle phi2{};     // second-pulse phase
  RationalAngle big_phi{};  // UR phase increment, meaningful when is_ur
  bool is_ur = false;

  std::vector<double> phases_rad() const;
};

/// Phase increment of the UR family: Phi^(4m) = sign*pi/m,
/// Phi^(4m+2) = sign*2m*pi/(2m+1). Requires n even, n >= 4.
RationalAngle ur_big_phi(int n, int sign);

/// Universally robust sequence of n pulses:
///   phi_k = (k-1)(k-2)/2 * Phi^(n) + (k-1) * phi2   (mod 2*pi)
/// Throws std::domain_error unless n is even and n >= 4.
PhaseSequence ur_phases(int n, RationalAngle phi2, int sign = +1);

/// UR sequence with phi2 = Phi^(n); the phase list is palindromic.
PhaseSequence symmetric_ur(int n, int sign = +1);

/// Literature comparison sequences, one period each.
PhaseSequence baseline(BaselineName name);

std::optional<BaselineName> parse_baseline(std::string_view name);

/// z-rotation angle chi = n*(phi2 - phi_tilde)/2 picked up by the ideal
/// (p = 1) sequence relative to the phi_tilde-shifted reference; the
/// rotation acts as diag(e^{i chi}, e^{-i chi}).
double phase_gate_angle(int n, double phi2, double phi_tilde);

}  // namespace urdd
