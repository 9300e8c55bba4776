#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qell/hom.hpp"

namespace qell {

/// A finite left G-set on points {0..n-1}, stored as a full action table.
class FiniteGSet {
 public:
  FiniteGSet(GroupPtr group, std::size_t points, std::vector<int> table)
      : group_(std::move(group)), points_(points), table_(std::move(table)) {
    require(table_.size() == group_->order() * points_, ErrorKind::precondition, "action table has wrong size");
    for (int v : table_)
      require(v >= 0 && static_cast<std::size_t>(v) < points_, ErrorKind::precondition, "action leaves the point set");
    for (std::size_t x = 0; x < points_; ++x)
      require(act(0, static_cast<int>(x)) == static_cast<int>(x), ErrorKind::precondition,
              "identity does not act trivially");
    for (const auto& s : group_->generators()) {
      int si = group_->index_of(s);
      for (std::size_t h = 0; h < group_->order(); ++h) {
        int sh = group_->mul(si, static_cast<int>(h));
        for (std::size_t x = 0; x < points_; ++x)
          require(act(sh, static_cast<int>(x)) == act(si, act(static_cast<int>(h), static_cast<int>(x))),
                  ErrorKind::precondition, "table is not a group action");
      }
    }
  }

  /// Builds the table from one image array per group generator.
  static FiniteGSet from_generator_action(GroupPtr g, std::size_t points,
                                          const std::vector<std::vector<int>>& gen_images) {
    require(gen_images.size() == g->generators().size(), ErrorKind::precondition,
            "need one point image array per generator");
    for (const auto& im : gen_images) {
      require(im.size() == points, ErrorKind::precondition, "generator action has wrong length");
      for (int v : im)
        require(v >= 0 && static_cast<std::size_t>(v) < points, ErrorKind::precondition, "action leaves the point set");
    }
    std::vector<int> table(g->order() * points, -1);
    std::vector<char> done(g->order(), 0);
    for (std::size_t x = 0; x < points; ++x) table[x] = static_cast<int>(x);
    done[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gen_images.size(); ++s) {
        int f = g->index_of(g->generators()[s] * g->element(e));
        for (std::size_t x = 0; x < points; ++x) {
          int v = gen_images[s][table[e * points + x]];
          if (done[f] && table[f * points + x] != v)
            fail(ErrorKind::precondition, "generator images do not define a group action");
          table[f * points + x] = v;
        }
        if (!done[f]) {
          done[f] = 1;
          queue.push_back(f);
        }
      }
    }
    return FiniteGSet(std::move(g), points, std::move(table));
  }

  static FiniteGSet point(GroupPtr g) { return trivial(std::move(g), 1); }

  static FiniteGSet trivial(GroupPtr g, std::size_t points) {
    std::vector<int> table(g->order() * points);
    for (std::size_t e = 0; e < g->order(); ++e)
      for (std::size_t x = 0; x < points; ++x) table[e * points + x] = static_cast<int>(x);
    return FiniteGSet(std::move(g), points, std::move(table));
  }

  static FiniteGSet natural(GroupPtr g) {
    const std::size_t n = g->degree();
    std::vector<int> table(g->order() * n);
    for (std::size_t e = 0; e < g->order(); ++e)
      for (std::size_t x = 0; x < n; ++x) table[e * n + x] = g->element(static_cast<int>(e))(static_cast<Point>(x));
    return FiniteGSet(std::move(g), n, std::move(table));
  }

  static FiniteGSet regular(GroupPtr g) {
    const std::size_t n = g->order();
    std::vector<int> table(n * n);
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t x = 0; x < n; ++x) table[e * n + x] = g->mul(static_cast<int>(e), static_cast<int>(x));
    return FiniteGSet(std::move(g), n, std::move(table));
  }

  /// Left cosets gH, numbered in order of their least element.
  static FiniteGSet cosets(GroupPtr g, const GroupPtr& h) {
    require(h->is_subgroup_of(*g), ErrorKind::precondition, h->name() + " is not a subgroup of " + g->name());
    std::vector<int> coset_of(g->order(), -1);
    std::size_t count = 0;
    for (std::size_t e = 0; e < g->order(); ++e) {
      if (coset_of[e] >= 0) continue;
      for (const auto& x : h->elements()) coset_of[g->index_of(g->element(static_cast<int>(e)) * x)] = static_cast<int>(count);
      ++count;
    }
    std::vector<int> rep(count);
    for (std::size_t e = g->order(); e-- > 0;) rep[coset_of[e]] = static_cast<int>(e);
    std::vector<int> table(g->order() * count);
    for (std::size_t e = 0; e < g->order(); ++e)
      for (std::size_t c = 0; c < count; ++c) table[e * count + c] = coset_of[g->mul(static_cast<int>(e), rep[c])];
    return FiniteGSet(std::move(g), count, std::move(table));
  }

  /// phi^* X: the same points, with K acting through phi: K -> G.
  static FiniteGSet restrict_along(const GroupHom& phi, const FiniteGSet& x) {
    require(phi.codomain()->same_elements(*x.group()), ErrorKind::precondition, "G-set is not over the codomain");
    const auto& k = phi.domain();
    const std::size_t n = x.size();
    std::vector<int> table(k->order() * n);
    for (std::size_t e = 0; e < k->order(); ++e)
      for (std::size_t p = 0; p < n; ++p) table[e * n + p] = x.act(phi.image_index(static_cast<int>(e)), static_cast<int>(p));
    return FiniteGSet(k, n, std::move(table));
  }

  /// X x Y over G x H; the point (x, y) has index x * |Y| + y.
  static FiniteGSet product(const DirectProduct& dp, const FiniteGSet& x, const FiniteGSet& y) {
    require(x.group()->same_elements(*dp.left) && y.group()->same_elements(*dp.right), ErrorKind::precondition,
            "factor G-sets do not match the product group");
    const auto& g = dp.group;
    const std::size_t n = x.size() * y.size();
    std::vector<int> table(g->order() * n);
    for (std::size_t e = 0; e < g->order(); ++e) {
      const auto& p = g->element(static_cast<int>(e));
      int a = dp.left->index_of(dp.project_left(p));
      int b = dp.right->index_of(dp.project_right(p));
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
          table[e * n + i * y.size() + j] =
              static_cast<int>(x.act(a, static_cast<int>(i)) * y.size() + y.act(b, static_cast<int>(j)));
    }
    return FiniteGSet(g, n, std::move(table));
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return points_; }
  int act(int element, int x) const { return table_[static_cast<std::size_t>(element) * points_ + x]; }
  int act(const Permutation& g, int x) const {
    int e = group_->index_of(g);
    require(e >= 0, ErrorKind::precondition, "element not in group " + group_->name());
    return act(e, x);
  }

  /// Action of each group generator as an image array.
  std::vector<std::vector<int>> generator_action() const {
    std::vector<std::vector<int>> out;
    for (const auto& s : group_->generators()) {
      int si = group_->index_of(s);
      std::vector<int> im(points_);
      for (std::size_t x = 0; x < points_; ++x) im[x] = act(si, static_cast<int>(x));
      out.push_back(std::move(im));
    }
    return out;
  }

  bool is_trivial_point() const { return points_ == 1; }

  friend bool operator==(const FiniteGSet& a, const FiniteGSet& b) {
    return a.group_->same_elements(*b.group_) && a.points_ == b.points_ && a.table_ == b.table_;
  }

 private:
  GroupPtr group_;
  std::size_t points_;
  std::vector<int> table_;
};

using GSetPtr = std::shared_ptr<const FiniteGSet>;

inline std::vector<int> fixed_points(const FiniteGSet& x, const Permutation& g) {
  int e = x.group()->index_of(g);
  require(e >= 0, ErrorKind::precondition, "element not in group");
  std::vector<int> out;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (x.act(e, static_cast<int>(p)) == static_cast<int>(p)) out.push_back(static_cast<int>(p));
  return out;
}

struct OrbitData {
  int rep = -1;                      // least point of the orbit
  std::vector<int> points;           // ascending
  std::vector<Permutation> transport;  // transport[i] * rep == points[i]
  std::vector<Permutation> stabilizer;
};

/// Orbits of the acting subgroup (given by its elements) on a subset of
/// points closed under it. Orbits are listed in order of their least point.
inline std::vector<OrbitData> orbits_with_stabilizers(const FiniteGSet& x, const std::vector<Permutation>& acting,
                                                      const std::vector<int>& subset) {
  std::vector<int> seen(x.size(), 0);
  std::vector<OrbitData> out;
  std::vector<int> acting_idx;
  for (const auto& a : acting) acting_idx.push_back(x.group()->index_of(a));
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (int p : sorted) {
    if (seen[p]) continue;
    OrbitData o;
    o.rep = p;
    std::vector<int> first(x.size(), -1);
    for (std::size_t i = 0; i < acting.size(); ++i) {
      int y = x.act(acting_idx[i], p);
      if (first[y] < 0) first[y] = static_cast<int>(i);
      if (y == p) o.stabilizer.push_back(acting[i]);
    }
    for (std::size_t y = 0; y < x.size(); ++y) {
      if (first[y] < 0) continue;
      require(std::binary_search(sorted.begin(), sorted.end(), static_cast<int>(y)), ErrorKind::internal,
              "point subset not closed under the acting group");
      seen[y] = 1;
      o.points.push_back(static_cast<int>(y));
      o.transport.push_back(acting[first[y]]);
    }
    out.push_back(std::move(o));
  }
  return out;
}

/// Orbit decomposition of X under all of G.
struct QuotientSet {
  std::size_t count = 0;
  std::vector<int> orbit_of;
  std::vector<int> reps;
};

inline QuotientSet quotient_set(const FiniteGSet& x) {
  QuotientSet q;
  q.orbit_of.assign(x.size(), -1);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (q.orbit_of[p] >= 0) continue;
    for (std::size_t e = 0; e < x.group()->order(); ++e)
      q.orbit_of[x.act(static_cast<int>(e), static_cast<int>(p))] = static_cast<int>(q.count);
    q.reps.push_back(static_cast<int>(p));
    ++q.count;
  }
  return q;
}

/// G x_H X with explicit canonical representatives: the class of (g, x) is
/// {(g h, h^-1 x) : h in H}, represented by its least (g index, x) pair.
struct InducedGSet {
  GSetPtr set;
  std::vector<std::pair<int, int>> reps;  // point -> (element index in G, point of X)
  std::vector<int> point_of_pair;         // g * |X| + x -> point
  std::size_t base_points = 0;

  int point_of(int g, int x) const { return point_of_pair[static_cast<std::size_t>(g) * base_points + x]; }
  /// i(x) = [e, x]
  int embed(int x) const { return point_of(0, x); }
};

inline InducedGSet induced_gset(const GroupPtr& g, const GroupPtr& h, const FiniteGSet& x) {
  require(h->is_subgroup_of(*g), ErrorKind::precondition, h->name() + " is not a subgroup of " + g->name());
  require(x.group()->same_elements(*h), ErrorKind::precondition, "X is not an H-set");
  InducedGSet out;
  const std::size_t nx = x.size();
  out.base_points = nx;
  out.point_of_pair.assign(g->order() * nx, -1);
  std::vector<int> h_in_g(h->order()), h_inv(h->order());
  for (std::size_t i = 0; i < h->order(); ++i) {
    h_in_g[i] = g->index_of(h->element(static_cast<int>(i)));
    h_inv[i] = h->inv(static_cast<int>(i));
  }
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t p = 0; p < nx; ++p) {
      if (out.point_of_pair[a * nx + p] >= 0) continue;
      int id = static_cast<int>(out.reps.size());
      out.reps.emplace_back(static_cast<int>(a), static_cast<int>(p));
      for (std::size_t i = 0; i < h->order(); ++i) {
        int ga = g->mul(static_cast<int>(a), h_in_g[i]);
        int xp = x.act(h_inv[i], static_cast<int>(p));
        out.point_of_pair[static_cast<std::size_t>(ga) * nx + xp] = id;
      }
    }
  const std::size_t n = out.reps.size();
  std::vector<int> table(g->order() * n);
  for (std::size_t k = 0; k < g->order(); ++k)
    for (std::size_t pt = 0; pt < n; ++pt) {
      auto [a, p] = out.reps[pt];
      table[k * n + pt] = out.point_of(g->mul(static_cast<int>(k), a), p);
    }
  out.set = std::make_shared<const FiniteGSet>(g, n, std::move(table));
  return out;
}

}  // namespace qell
