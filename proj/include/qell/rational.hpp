#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "qell/error.hpp"

namespace qell {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t n = r.numerator(), d = r.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

/// r - floor(r), in [0, 1).
inline Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

/// Reduced "a/b" with b >= 1; integers keep the "/1".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "a/b" or "a".
inline Rational parse_rational(const std::string& s) {
  auto bad = [&] { fail(ErrorKind::schema, "malformed rational \"" + s + "\""); };
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) bad();
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      std::string tail = s.substr(slash + 1);
      den = std::stoll(tail, &used);
      if (used != tail.size() || den <= 0) bad();
    }
    return Rational(num, den);
  } catch (const std::logic_error&) {
    fail(ErrorKind::schema, "malformed rational \"" + s + "\"");
  }
}

}  // namespace qell
