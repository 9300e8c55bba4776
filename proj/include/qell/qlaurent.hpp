#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qell/rational.hpp"

namespace qell {

using BigInt = boost::multiprecision::cpp_int;

/// Finite sum of c * q^r with integer c and rational r: an element of
/// Z[q^Q]. Zero coefficients are never stored.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long long c) {  // NOLINT: integers embed as constants
    if (c != 0) terms_.emplace(Rational(0), BigInt(c));
  }

  static QLaurent monomial(const BigInt& c, const Rational& r) {
    QLaurent f;
    if (c != 0) f.terms_.emplace(r, c);
    return f;
  }
  static QLaurent q_power(const Rational& r) { return monomial(1, r); }

  const std::map<Rational, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const Rational& r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [r, c] : o.terms_) accumulate(r, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [r, c] : o.terms_) accumulate(r, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  QLaurent operator-() const {
    QLaurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ra, ca] : a.terms_)
      for (const auto& [rb, cb] : b.terms_) r.accumulate(ra + rb, ca * cb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  QLaurent scaled(const BigInt& k) const {
    QLaurent r;
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
  }

  /// Multiplication by q^r.
  QLaurent shifted(const Rational& r) const {
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + r, c);
    return out;
  }

  /// f(q) -> f(q^s); a ring isomorphism onto its image for s > 0.
  QLaurent rescaled(const Rational& s) const {
    require(s > 0, ErrorKind::precondition, "rescale factor must be positive");
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * s, c);
    return out;
  }

  /// Exact division of every coefficient; throws if any is not divisible.
  QLaurent divided_exactly(const BigInt& k) const {
    QLaurent out;
    for (const auto& [e, c] : terms_) {
      require(c % k == 0, ErrorKind::internal, "non-integral coefficient in exact division");
      out.terms_.emplace(e, c / k);
    }
    return out;
  }

  /// True when every exponent has denominator dividing d.
  bool exponents_divide(std::int64_t d) const {
    for (const auto& [e, c] : terms_)
      if (d % e.denominator() != 0) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      bool unit = e == Rational(0);
      if (mag != 1 || unit) out += mag.str();
      if (!unit) {
        if (mag != 1) out += "*";
        out += "q";
        if (e != Rational(1)) {
          out += "^";
          out += e.denominator() == 1 ? std::to_string(e.numerator()) : "(" + qell::to_string(e) + ")";
        }
      }
    }
    return out;
  }

  friend bool operator==(const QLaurent&, const QLaurent&) = default;

 private:
  void accumulate(const Rational& r, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(r, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Rational, BigInt> terms_;
};

}  // namespace qell
