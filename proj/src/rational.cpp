#include "urdd/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace urdd {

RationalAngle RationalAngle::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("RationalAngle: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  const std::int64_t two_turns = 2 * den;
  num %= two_turns;
  if (num < 0) num += two_turns;
  // wrapping can reintroduce a common factor, e.g. 9/3 -> 3/3 -> 1/1
  const std::int64_t g2 = std::gcd(num, den);
  if (g2 > 1) {
    num /= g2;
    den /= g2;
  }
  RationalAngle r;
  r.num = num;
  r.den = den;
  return r;
}

RationalAngle RationalAngle::operator+(RationalAngle rhs) const {
  return of(num * rhs.den + rhs.num * den, den * rhs.den);
}

RationalAngle RationalAngle::operator-(RationalAngle rhs) const {
  return of(num * rhs.den - rhs.num * den, den * rhs.den);
}

RationalAngle RationalAngle::scaled(std::int64_t k) const { return of(num * k, den); }

std::string RationalAngle::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<RationalAngle> RationalAngle::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  };
  const auto slash = text.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return of(num, den);
}

}  // namespace urdd
