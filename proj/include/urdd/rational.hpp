#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace urdd {

/// Angle stored as an exact rational multiple of pi, normalized modulo 2*pi.
///
/// Canonical form: den > 0, gcd(num, den) = 1, num in [0, 2*den), so two
/// angles are equal modulo 2*pi iff their (num, den) pairs are identical.
struct RationalAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static RationalAngle of(std::int64_t num, std::int64_t den = 1);

  RationalAngle operator+(RationalAngle rhs) const;
  RationalAngle operator-(RationalAngle rhs) const;
  RationalAngle scaled(std::int64_t k) const;

  bool operator==(const RationalAngle&) const = default;

  double radians() const { return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den); }

  /// "num/den" in canonical form, e.g. "3/2".
  std::string str() const;

  /// Parses "num/den" or a bare integer "num"; nullopt on malformed input.
  static std::optional<RationalAngle> parse(std::string_view text);
};

}  // namespace urdd
