#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qell/error.hpp"
#include "qell/permutation.hpp"

namespace qell {

inline constexpr std::size_t kDefaultOrderCap = 20160;

/// Group-order cap, overridable through QELL_ORDER_CAP.
inline std::size_t order_cap_from_env() {
  if (const char* s = std::getenv("QELL_ORDER_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOrderCap;
}

/// Conjugacy classes indexed by position; class reps are element indices.
/// Because elements are sorted and classes are discovered in element order,
/// each rep is the least element of its class and class 0 is {identity}.
struct ConjugacyData {
  std::vector<int> class_reps;
  std::vector<int> class_of;  // element index -> class index
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Permutation>> centralizer_gens;
  std::vector<int> inverse_class;  // class of g^-1
};

/// A fully enumerated permutation group. Elements are sorted
/// lexicographically by image array, so the identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::string name,
              std::size_t cap = order_cap_from_env())
      : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
    for (const auto& g : generators_)
      require(g.degree() == degree_, ErrorKind::precondition, "invalid generator: degree mismatch");
    elements_ = closure(degree_, generators_, cap);
    finish();
  }

  /// Wraps an already closed element set (e.g. a centralizer) and picks a
  /// small generating set greedily.
  static std::shared_ptr<const FiniteGroup> from_closed_set(std::size_t degree, std::vector<Permutation> elements,
                                                           std::string name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Permutation> gens;
    std::set<Permutation> span{Permutation::identity(degree)};
    for (const auto& e : elements) {
      if (span.count(e)) continue;
      gens.push_back(e);
      auto cl = closure(degree, gens, elements.size());
      span = std::set<Permutation>(cl.begin(), cl.end());
    }
    require(span.size() == elements.size(), ErrorKind::precondition, "element set is not a subgroup");
    return std::shared_ptr<const FiniteGroup>(new FiniteGroup(degree, std::move(gens), std::move(name),
                                                              std::move(elements), Closed{}));
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }
  const ConjugacyData& conjugacy() const noexcept { return conj_; }
  std::size_t num_classes() const noexcept { return conj_.class_reps.size(); }
  long long exponent() const noexcept { return exponent_; }

  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return -1;
    return static_cast<int>(it - elements_.begin());
  }
  bool contains(const Permutation& p) const { return p.degree() == degree_ && index_of(p) >= 0; }

  int mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * order() + b];
    return index_of(elements_[a] * elements_[b]);
  }
  int inv(int a) const { return inverse_[a]; }

  int class_of(const Permutation& p) const {
    int i = index_of(p);
    require(i >= 0, ErrorKind::precondition, "element not in group " + name_);
    return conj_.class_of[i];
  }
  const Permutation& class_rep(int cls) const { return elements_[conj_.class_reps[cls]]; }

  bool is_abelian() const {
    for (const auto& a : generators_)
      for (const auto& b : generators_)
        if (a * b != b * a) return false;
    return true;
  }

  std::vector<Permutation> centralizer_elements(const Permutation& g) const {
    std::vector<Permutation> out;
    for (const auto& h : elements_)
      if (h * g == g * h) out.push_back(h);
    return out;
  }

  bool is_subgroup_of(const FiniteGroup& other) const {
    if (degree_ != other.degree_ || other.order() % order() != 0) return false;
    for (const auto& e : elements_)
      if (!other.contains(e)) return false;
    return true;
  }

  bool same_elements(const FiniteGroup& other) const { return elements_ == other.elements_; }

  static std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap) {
    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
      Permutation x = std::move(queue.front());
      queue.pop_front();
      for (const auto& s : gens) {
        Permutation y = s * x;
        if (seen.insert(y).second) {
          if (seen.size() > cap) fail(ErrorKind::cap, "group too large (order cap " + std::to_string(cap) + ")");
          queue.push_back(std::move(y));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

 private:
  struct Closed {};
  FiniteGroup(std::size_t degree, std::vector<Permutation> gens, std::string name, std::vector<Permutation> elements,
              Closed)
      : degree_(degree), generators_(std::move(gens)), name_(std::move(name)), elements_(std::move(elements)) {
    finish();
  }

  void finish() {
    const std::size_t n = elements_.size();
    inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) inverse_[i] = index_of(elements_[i].inverse());
    if (n <= 512) {
      mul_table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul_table_[a * n + b] = index_of(elements_[a] * elements_[b]);
    }
    exponent_ = 1;
    conj_.class_of.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (conj_.class_of[i] >= 0) continue;
      const int cls = static_cast<int>(conj_.class_reps.size());
      conj_.class_reps.push_back(static_cast<int>(i));
      std::size_t size = 0;
      std::deque<int> queue{static_cast<int>(i)};
      conj_.class_of[i] = cls;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        ++size;
        for (const auto& s : generators_) {
          int y = index_of(s * elements_[x] * s.inverse());
          if (conj_.class_of[y] < 0) {
            conj_.class_of[y] = cls;
            queue.push_back(y);
          }
        }
      }
      conj_.class_sizes.push_back(size);
      exponent_ = std::lcm(exponent_, elements_[i].order());
    }
    conj_.inverse_class.resize(conj_.class_reps.size());
    for (std::size_t c = 0; c < conj_.class_reps.size(); ++c)
      conj_.inverse_class[c] = conj_.class_of[inverse_[conj_.class_reps[c]]];
    for (int rep : conj_.class_reps) {
      auto cent = centralizer_elements(elements_[rep]);
      std::vector<Permutation> gens;
      std::set<Permutation> span{Permutation::identity(degree_)};
      for (const auto& e : cent) {
        if (span.count(e)) continue;
        gens.push_back(e);
        auto cl = closure(degree_, gens, cent.size());
        span = std::set<Permutation>(cl.begin(), cl.end());
      }
      conj_.centralizer_gens.push_back(std::move(gens));
    }
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<int> inverse_;
  std::vector<int> mul_table_;
  ConjugacyData conj_;
  long long exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(std::size_t degree, std::vector<Permutation> generators, std::string name = "",
                           std::size_t cap = order_cap_from_env()) {
  require(degree >= 1, ErrorKind::precondition, "degree must be positive");
  return std::make_shared<const FiniteGroup>(degree, std::move(generators), std::move(name), cap);
}

inline GroupPtr cyclic_group(int n) {
  require(n >= 1, ErrorKind::precondition, "parameter out of range: C" + std::to_string(n));
  std::vector<Point> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  std::vector<Permutation> gens;
  if (n > 1) gens.emplace_back(std::move(im));
  return make_group(n, std::move(gens), "C" + std::to_string(n));
}

inline GroupPtr symmetric_group(int n) {
  require(n >= 1, ErrorKind::precondition, "parameter out of range: S" + std::to_string(n));
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return make_group(n, std::move(gens), "S" + std::to_string(n));
}

inline GroupPtr alternating_group(int n) {
  require(n >= 1, ErrorKind::precondition, "parameter out of range: A" + std::to_string(n));
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return make_group(n, std::move(gens), "A" + std::to_string(n));
}

/// Dihedral group of order 2n acting on the n-gon's vertices.
inline GroupPtr dihedral_group(int n) {
  require(n >= 3, ErrorKind::precondition, "parameter out of range: D" + std::to_string(n) + " (need n >= 3)");
  std::vector<Point> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return make_group(n, {Permutation(std::move(rot)), Permutation(std::move(ref))}, "D" + std::to_string(n));
}

/// G x H acting on the disjoint union of the factors' point sets.
struct DirectProduct {
  GroupPtr group, left, right;

  Permutation embed_left(const Permutation& a) const {
    std::vector<Point> im(left->degree() + right->degree());
    for (std::size_t i = 0; i < left->degree(); ++i) im[i] = a(static_cast<Point>(i));
    for (std::size_t i = 0; i < right->degree(); ++i)
      im[left->degree() + i] = static_cast<Point>(left->degree() + i);
    return Permutation(std::move(im));
  }
  Permutation embed_right(const Permutation& b) const {
    std::vector<Point> im(left->degree() + right->degree());
    for (std::size_t i = 0; i < left->degree(); ++i) im[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < right->degree(); ++i)
      im[left->degree() + i] = static_cast<Point>(left->degree()) + b(static_cast<Point>(i));
    return Permutation(std::move(im));
  }
  Permutation pair(const Permutation& a, const Permutation& b) const { return embed_left(a) * embed_right(b); }
  Permutation project_left(const Permutation& p) const {
    auto im = p.images();
    return Permutation(std::vector<Point>(im.begin(), im.begin() + static_cast<long>(left->degree())));
  }
  Permutation project_right(const Permutation& p) const {
    auto im = p.images();
    std::vector<Point> out;
    const auto off = static_cast<Point>(left->degree());
    for (std::size_t i = left->degree(); i < im.size(); ++i) out.push_back(im[i] - off);
    return Permutation(std::move(out));
  }
};

inline DirectProduct direct_product(GroupPtr g, GroupPtr h) {
  DirectProduct dp;
  dp.left = g;
  dp.right = h;
  const std::size_t deg = g->degree() + h->degree();
  std::vector<Permutation> gens;
  for (const auto& a : g->generators()) gens.push_back(dp.embed_left(a));
  for (const auto& b : h->generators()) gens.push_back(dp.embed_right(b));
  std::size_t cap = order_cap_from_env();
  if (g->order() * h->order() > cap) fail(ErrorKind::cap, "group too large (order cap " + std::to_string(cap) + ")");
  dp.group = make_group(deg, std::move(gens), g->name() + "x" + h->name(), cap);
  return dp;
}

/// The subgroup of G generated by `gens`, each of which must lie in G.
inline GroupPtr subgroup(const GroupPtr& g, std::vector<Permutation> gens, std::string name = "") {
  for (const auto& s : gens)
    require(g->contains(s), ErrorKind::precondition, "subgroup generator not in " + g->name());
  return make_group(g->degree(), std::move(gens), std::move(name));
}

inline GroupPtr centralizer_group(const FiniteGroup& g, const Permutation& x) {
  return FiniteGroup::from_closed_set(g.degree(), g.centralizer_elements(x), "C_" + g.name() + x.to_cycle_string());
}

/// {x in G : g x = x h}; empty iff g and h are not conjugate.
inline std::vector<Permutation> transporter(const FiniteGroup& grp, const Permutation& g, const Permutation& h) {
  std::vector<Permutation> out;
  for (const auto& x : grp.elements())
    if (g * x == x * h) out.push_back(x);
  return out;
}

/// Some r with r * a * r^-1 == b; throws if a and b are not conjugate.
inline Permutation conjugator(const FiniteGroup& grp, const Permutation& a, const Permutation& b) {
  for (const auto& r : grp.elements())
    if (r * a == b * r) return r;
  fail(ErrorKind::internal, "elements are not conjugate");
}

/// All subgroups generated by at most two elements, sorted by order then
/// elements. This is every subgroup for the small groups it is used on.
inline std::vector<GroupPtr> two_generated_subgroups(const GroupPtr& g) {
  std::set<std::vector<Permutation>> seen;
  std::vector<GroupPtr> out;
  const auto& el = g->elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a; b < el.size(); ++b) {
      auto cl = FiniteGroup::closure(g->degree(), {el[a], el[b]}, g->order());
      if (!seen.insert(cl).second) continue;
      out.push_back(FiniteGroup::from_closed_set(g->degree(), std::move(cl),
                                                 g->name() + "_sub" + std::to_string(out.size())));
    }
  std::stable_sort(out.begin(), out.end(), [](const GroupPtr& x, const GroupPtr& y) {
    if (x->order() != y->order()) return x->order() < y->order();
    return x->elements() < y->elements();
  });
  return out;
}

}  // namespace qell
