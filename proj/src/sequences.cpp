#include "urdd/sequences.hpp"

#include <stdexcept>

namespace urdd {

std::vector<double> PhaseSequence::phases_rad() const {
  std::vector<double> out;
  out.reserve(phases.size());
  for (const RationalAngle& r : phases) out.push_back(r.radians());
  return out;
}

RationalAngle ur_big_phi(int n, int sign) {
  if (n < 4 || n % 2 != 0) {
    throw std::domain_error("ur_big_phi: UR sequences need an even pulse count >= 4");
  }
  if (n % 4 == 0) return RationalAngle::of(sign, n / 4);
  const int m = (n - 2) / 4;
  return RationalAngle::of(sign * 2 * m, 2 * m + 1);
}

PhaseSequence ur_phases(int n, RationalAngle phi2, int sign) {
  const RationalAngle big_phi = ur_big_phi(n, sign);
  PhaseSequence seq;
  seq.name = "UR" + std::to_string(n);
  seq.n = n;
  seq.phi2 = phi2;
  seq.big_phi = big_phi;
  seq.is_ur = true;
  seq.phases.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const std::int64_t tri = static_cast<std::int64_t>(k - 1) * (k - 2) / 2;
    seq.phases.push_back(big_phi.scaled(tri) + phi2.scaled(k - 1));
  }
  return seq;
}

PhaseSequence symmetric_ur(int n, int sign) {
  return ur_phases(n, ur_big_phi(n, sign), sign);
}

namespace {

PhaseSequence from_list(std::string name, std::initializer_list<RationalAngle> phases) {
  PhaseSequence seq;
  seq.name = std::move(name);
  seq.n = static_cast<int>(phases.size());
  seq.phases = phases;
  if (seq.n > 1) seq.phi2 = seq.phases[1];
  return seq;
}

}  // namespace

PhaseSequence baseline(BaselineName name) {
  const auto r = [](std::int64_t num, std::int64_t den) { return RationalAngle::of(num, den); };
  switch (name) {
    case BaselineName::Cpmg:
      return from_list("CPMG", {r(0, 1), r(0, 1)});
    case BaselineName::Xy4:
      return from_list("XY4", {r(0, 1), r(1, 2), r(0, 1), r(1, 2)});
    case BaselineName::Xy8:
      return from_list("XY8", {r(0, 1), r(1, 2), r(0, 1), r(1, 2), r(1, 2), r(0, 1), r(1, 2), r(0, 1)});
    case BaselineName::Kdd:
      return from_list("KDD", {r(1, 6), r(0, 1), r(1, 2), r(0, 1), r(1, 6)});
    case BaselineName::KddXy4: {
      const PhaseSequence block = baseline(BaselineName::Kdd);
      PhaseSequence seq;
      seq.name = "KDD_XY4";
      seq.n = 20;
      seq.phases.reserve(20);
      for (const RationalAngle offset : {r(0, 1), r(1, 2), r(0, 1), r(1, 2)}) {
        for (const RationalAngle& ph : block.phases) seq.phases.push_back(ph + offset);
      }
      seq.phi2 = seq.phases[1];
      return seq;
    }
  }
  throw std::domain_error("baseline: unknown sequence name");
}

std::optional<BaselineName> parse_baseline(std::string_view name) {
  if (name == "CPMG" || name == "cpmg") return BaselineName::Cpmg;
  if (name == "XY4" || name == "xy4") return BaselineName::Xy4;
  if (name == "XY8" || name == "xy8") return BaselineName::Xy8;
  if (name == "KDD" || name == "kdd") return BaselineName::Kdd;
  if (name == "KDD_XY4" || name == "kdd-xy4" || name == "kdd_xy4") return BaselineName::KddXy4;
  return std::nullopt;
}

double phase_gate_angle(int n, double phi2, double phi_tilde) {
  return 0.5 * n * (phi2 - phi_tilde);
}

}  // namespace urdd
