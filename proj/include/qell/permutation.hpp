#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qell/error.hpp"

namespace qell {

using Point = std::int32_t;

/// A bijection of {0..n-1}, stored as its image array. Composition is
/// right-to-left: (a * b)(x) == a(b(x)), so groups act on the left.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
      if (p < 0 || static_cast<std::size_t>(p) >= images_.size() || seen[p])
        fail(ErrorKind::precondition, "invalid generator: not a bijection");
      seen[p] = 1;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im), Unchecked{});
  }

  /// Cycles are applied right to left, matching composition order.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation result = identity(degree);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto& cyc = *it;
      std::vector<char> seen(degree, 0);
      for (Point p : cyc) {
        if (p < 0 || static_cast<std::size_t>(p) >= degree)
          fail(ErrorKind::precondition, "invalid generator: point out of range");
        if (seen[p]) fail(ErrorKind::precondition, "invalid generator: repeated point in cycle");
        seen[p] = 1;
      }
      Permutation c = identity(degree);
      for (std::size_t i = 0; i < cyc.size(); ++i) c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
      result = c * result;
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const {
    std::vector<Point> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = images_[rhs.images_[x]];
    return Permutation(std::move(im), Unchecked{});
  }

  Permutation inverse() const {
    std::vector<Point> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<Point>(x);
    return Permutation(std::move(im), Unchecked{});
  }

  Permutation pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Permutation acc = identity(degree());
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != static_cast<Point>(x)) return false;
    return true;
  }

  /// Order as lcm of cycle lengths.
  long long order() const {
    long long l = 1;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      long long len = 0;
      for (Point x = static_cast<Point>(s); !seen[x]; x = images_[x]) {
        seen[x] = 1;
        ++len;
      }
      l = std::lcm(l, len);
    }
    return l;
  }

  std::string to_cycle_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == static_cast<Point>(s)) continue;
      out += '(';
      bool first = true;
      for (Point x = static_cast<Point>(s); !seen[x]; x = images_[x]) {
        seen[x] = 1;
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

}  // namespace qell
