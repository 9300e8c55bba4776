#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qell/group.hpp"

namespace qell {

namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Polynomials over F_p, coefficient of x^i at index i, no trailing zeros.
using Poly = std::vector<u64>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& b, u64 p) {
  trim(a);
  const u64 lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 factor = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_div(Poly a, const Poly& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 factor = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
    trim(a);
  }
  return q;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

/// Distinct roots in F_p of a nonzero polynomial (Cantor-Zassenhaus).
inline std::vector<u64> poly_roots(Poly f, u64 p, std::mt19937_64& rng) {
  trim(f);
  std::vector<u64> roots;
  if (f.size() <= 1) return roots;
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;
  trim(xp);
  Poly g = poly_gcd(f, xp, p);
  std::vector<Poly> stack{g};
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (!stack.empty()) {
    Poly h = std::move(stack.back());
    stack.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      roots.push_back((p - mulmod(h[0], powmod(h[1], p - 2, p), p)) % p);
      continue;
    }
    for (;;) {
      Poly t = poly_powmod(Poly{dist(rng), 1}, (p - 1) / 2, h, p);
      if (t.empty()) t.push_back(0);
      t[0] = (t[0] + p - 1) % p;
      trim(t);
      Poly d = poly_gcd(h, t, p);
      if (d.size() > 1 && d.size() < h.size()) {
        stack.push_back(poly_div(h, d, p));
        stack.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

using Matrix = std::vector<std::vector<u64>>;

inline u64 determinant(Matrix a, u64 p) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = mulmod(det, a[c][c], p);
    u64 inv = powmod(a[c][c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      u64 f = mulmod(a[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + p - mulmod(f, a[c][k], p)) % p;
    }
  }
  return det;
}

/// det(xI - A), by evaluation at 0..n and Lagrange interpolation.
inline Poly char_poly(const Matrix& a, u64 p) {
  const std::size_t n = a.size();
  std::vector<u64> xs(n + 1), ys(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    Matrix m(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = ((i == j ? t : 0) + p - a[i][j]) % p;
    xs[t] = t;
    ys[t] = determinant(std::move(m), p);
  }
  Poly result(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    Poly basis{1};
    u64 denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      Poly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = (next[k + 1] + basis[k]) % p;
        next[k] = (next[k] + p - mulmod(basis[k], xs[j], p)) % p;
      }
      basis = std::move(next);
      denom = mulmod(denom, (xs[i] + p - xs[j]) % p, p);
    }
    u64 scale = mulmod(ys[i], powmod(denom, p - 2, p), p);
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] = (result[k] + mulmod(basis[k], scale, p)) % p;
  }
  trim(result);
  return result;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    u64 inv = powmod(m[row][c], p - 2, p);
    for (auto& v : m[row]) v = mulmod(v, inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      u64 f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + p - mulmod(f, m[row][k], p)) % p;
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis of {v : A v = 0}.
inline Matrix nullspace(Matrix a, u64 p) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a, p);
  Matrix basis;
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace modp

/// Exact surrogate for cyclotomic arithmetic: one prime p = 1 (mod N) large
/// enough that every inner product of class functions lifts exactly, and a
/// fixed zeta of order N. One context is shared by every group in a session.
class ScalarContext {
 public:
  using u64 = modp::u64;

  /// N must be a multiple of every exponent in play; max_order bounds |G|.
  ScalarContext(long long exponent, std::size_t max_order) : exponent_(exponent), max_order_(max_order) {
    require(exponent >= 1, ErrorKind::precondition, "exponent must be positive");
    const u64 bound = std::max<u64>(2ULL * max_order * max_order, 1000);
    u64 n = static_cast<u64>(exponent);
    u64 cand = (bound / n + 1) * n + 1;
    while (!modp::is_prime(cand)) cand += n;
    prime_ = cand;
    auto factors = modp::prime_factors(prime_ - 1);
    u64 gen = 2;
    for (;; ++gen) {
      bool ok = true;
      for (u64 f : factors)
        if (modp::powmod(gen, (prime_ - 1) / f, prime_) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    zeta_ = modp::powmod(gen, (prime_ - 1) / n, prime_);
  }

  static ScalarContext for_groups(std::span<const GroupPtr> groups) {
    long long n = 1;
    std::size_t m = 1;
    for (const auto& g : groups) {
      n = std::lcm(n, g->exponent());
      m = std::max(m, g->order());
    }
    return ScalarContext(n, m);
  }

  long long exponent() const noexcept { return exponent_; }
  u64 prime() const noexcept { return prime_; }
  u64 zeta() const noexcept { return zeta_; }
  std::size_t max_order() const noexcept { return max_order_; }

  /// zeta^k for any integer k.
  u64 root(long long k) const {
    long long r = ((k % exponent_) + exponent_) % exponent_;
    return modp::powmod(zeta_, static_cast<u64>(r), prime_);
  }

  u64 add(u64 a, u64 b) const { return (a + b) % prime_; }
  u64 sub(u64 a, u64 b) const { return (a + prime_ - b) % prime_; }
  u64 mul(u64 a, u64 b) const { return modp::mulmod(a, b, prime_); }
  u64 inv(u64 a) const {
    require(a % prime_ != 0, ErrorKind::internal, "inverse of zero in prime field");
    return modp::powmod(a, prime_ - 2, prime_);
  }
  u64 from_int(long long v) const {
    long long p = static_cast<long long>(prime_);
    return static_cast<u64>(((v % p) + p) % p);
  }
  /// Symmetric lift into (-p/2, p/2].
  long long lift(u64 v) const {
    return v > prime_ / 2 ? static_cast<long long>(v) - static_cast<long long>(prime_) : static_cast<long long>(v);
  }

  void check_group(const FiniteGroup& g) const {
    if (exponent_ % g.exponent() != 0 || g.order() > max_order_)
      fail(ErrorKind::precondition, "rebuild scalar context: group " + g.name() + " (order " +
                                        std::to_string(g.order()) + ", exponent " + std::to_string(g.exponent()) +
                                        ") is not covered");
  }

 private:
  long long exponent_;
  std::size_t max_order_;
  u64 prime_ = 0;
  u64 zeta_ = 0;
};

}  // namespace qell
