#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>

namespace urdd {

/// 2x2 complex propagator. All routines below keep it unitary to ~1e-12.
using Unitary2 = Eigen::Matrix2cd;
using Complex = std::complex<double>;

/// One imperfect pulse: transition probability p and the two propagator
/// phases of the special-unitary parametrization
///
///   U(alpha, beta, p) = [  sqrt(1-p) e^{+i alpha}   sqrt(p) e^{+i beta} ]
///                       [ -sqrt(p)   e^{-i beta}    sqrt(1-p) e^{-i alpha} ]
struct PulseParams {
  double p = 0.0;      // transition probability, in [0, 1]
  double alpha = 0.0;  // diagonal phase, radians, kept in (-pi, pi]
  double beta = 0.0;   // off-diagonal phase, radians, kept in (-pi, pi]
};

/// Inverse of make_propagator. global_phase g satisfies
/// det(e^{-ig} U) = 1 with g in (-pi/2, pi/2], ties broken toward +pi/2.
struct ExtractedParams {
  PulseParams params;
  double global_phase = 0.0;
  bool alpha_degenerate = false;  // p = 1: alpha unobservable, reported 0
  bool beta_degenerate = false;   // p = 0: beta unobservable, reported 0
};

struct FidelityResult {
  double value = 0.0;  // F = |Tr(target^dag u)| / 2
  double error = 0.0;  // 1 - F
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double x);

/// max_ij |(U U^dag - I)_ij|
double unitarity_defect(const Unitary2& u);

/// Builds the propagator above. Throws std::domain_error if p is outside [0, 1].
Unitary2 make_propagator(const PulseParams& params);

/// A drive phase shift phi enters the propagator as beta -> beta + phi.
PulseParams apply_phase_shift(PulseParams params, double phi);

/// Same phase shift at the matrix level: Z(phi) u Z(-phi) with
/// Z(phi) = diag(e^{i phi/2}, e^{-i phi/2}); exact for any propagator.
Unitary2 shift_drive_phase(const Unitary2& u, double phi);

/// Recovers (p, alpha, beta) and the global phase from a unitary.
/// Throws std::domain_error if u is not unitary (defect above ~1e-8).
ExtractedParams extract_params(const Unitary2& u);

/// Right-to-left product: the first element acts first.
/// Throws std::domain_error on an empty list.
Unitary2 compose(std::span<const Unitary2> factors);

/// F = |Tr(target^dag u)| / 2 and its complement; global-phase invariant.
FidelityResult fidelity(const Unitary2& u, const Unitary2& target);

}  // namespace urdd
