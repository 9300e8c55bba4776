#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "qell/hom.hpp"
#include "qell/modp.hpp"
#include "qell/rational.hpp"

namespace qell {

/// Prime-field valued function on the conjugacy classes of a group.
struct ClassFunction {
  GroupPtr group;
  std::vector<modp::u64> values;  // indexed by class

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group->same_elements(*b.group) && a.values == b.values;
  }
};

class CharacterTable {
 public:
  CharacterTable(GroupPtr group, ScalarContext ctx, std::vector<ClassFunction> rows)
      : group_(std::move(group)), ctx_(ctx), rows_(std::move(rows)) {
    for (const auto& r : rows_) degrees_.push_back(ctx_.lift(r.values[0]));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const ScalarContext& scalars() const noexcept { return ctx_; }
  const std::vector<ClassFunction>& rows() const noexcept { return rows_; }
  const ClassFunction& row(std::size_t i) const { return rows_[i]; }
  const std::vector<long long>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  GroupPtr group_;
  ScalarContext ctx_;
  std::vector<ClassFunction> rows_;
  std::vector<long long> degrees_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

inline ClassFunction trivial_cf(const ScalarContext&, const GroupPtr& g) {
  return {g, std::vector<modp::u64>(g->num_classes(), 1)};
}

inline ClassFunction add_cf(const ScalarContext& ctx, const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r{a.group, a.values};
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = ctx.add(r.values[i], b.values[i]);
  return r;
}

inline ClassFunction scale_cf(const ScalarContext& ctx, long long k, const ClassFunction& a) {
  ClassFunction r{a.group, a.values};
  for (auto& v : r.values) v = ctx.mul(v, ctx.from_int(k));
  return r;
}

inline ClassFunction tensor_cf(const ScalarContext& ctx, const ClassFunction& a, const ClassFunction& b) {
  require(a.group->same_elements(*b.group), ErrorKind::precondition, "class functions on different groups");
  ClassFunction r{a.group, a.values};
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = ctx.mul(r.values[i], b.values[i]);
  return r;
}

/// <chi, psi> = (1/|G|) sum_g chi(g) psi(g^-1), lifted symmetrically.
inline long long inner_product(const ScalarContext& ctx, const ClassFunction& chi, const ClassFunction& psi) {
  require(chi.group->same_elements(*psi.group), ErrorKind::precondition, "group mismatch in inner product");
  const auto& g = *chi.group;
  const auto& cd = g.conjugacy();
  modp::u64 sum = 0;
  for (std::size_t c = 0; c < cd.class_reps.size(); ++c) {
    modp::u64 term = ctx.mul(chi.values[c], psi.values[cd.inverse_class[c]]);
    sum = ctx.add(sum, ctx.mul(term, ctx.from_int(static_cast<long long>(cd.class_sizes[c]))));
  }
  return ctx.lift(ctx.mul(sum, ctx.inv(ctx.from_int(static_cast<long long>(g.order())))));
}

/// Multiplicities of each irreducible; the recombination is checked.
inline std::vector<long long> decompose(const CharacterTable& t, const ClassFunction& f) {
  const auto& ctx = t.scalars();
  // Rational multiplicities with denominator dividing |G| lift to residues of size
  // at least p/|G|; genuine integer multiplicities are far below that.
  const long long bound = static_cast<long long>(ctx.prime() / (2 * f.group->order()));
  std::vector<long long> m(t.size());
  ClassFunction acc{f.group, std::vector<modp::u64>(f.values.size(), 0)};
  for (std::size_t i = 0; i < t.size(); ++i) {
    m[i] = inner_product(ctx, f, t.row(i));
    require(m[i] < bound && m[i] > -bound, ErrorKind::precondition, "not a character combination");
    if (m[i] != 0) acc = add_cf(ctx, acc, scale_cf(ctx, m[i], t.row(i)));
  }
  require(acc.values == f.values, ErrorKind::precondition, "not a character combination");
  return m;
}

/// psi o f on `domain`, where f maps domain elements into psi's group.
inline ClassFunction restrict_cf(const GroupPtr& domain, const std::function<Permutation(const Permutation&)>& f,
                                 const ClassFunction& psi) {
  ClassFunction r{domain, {}};
  for (std::size_t c = 0; c < domain->num_classes(); ++c)
    r.values.push_back(psi.values[psi.group->class_of(f(domain->class_rep(static_cast<int>(c))))]);
  return r;
}

inline ClassFunction restrict_cf(const GroupHom& phi, const ClassFunction& psi) {
  require(phi.codomain()->same_elements(*psi.group), ErrorKind::precondition, "class function not on codomain");
  return restrict_cf(phi.domain(), [&](const Permutation& p) { return phi(p); }, psi);
}

/// Ind_H^G chi(g) = (1/|H|) sum_{x in G, x^-1 g x in H} chi(x^-1 g x).
inline ClassFunction induce_cf(const ScalarContext& ctx, const GroupPtr& g, const ClassFunction& chi) {
  const auto& h = chi.group;
  require(h->is_subgroup_of(*g), ErrorKind::precondition, "subgroup not verified: " + h->name() + " in " + g->name());
  ClassFunction r{g, {}};
  const modp::u64 inv_h = ctx.inv(ctx.from_int(static_cast<long long>(h->order())));
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    const auto& rep = g->class_rep(static_cast<int>(c));
    modp::u64 sum = 0;
    for (const auto& x : g->elements()) {
      Permutation y = x.inverse() * rep * x;
      int yi = h->index_of(y);
      if (yi >= 0) sum = ctx.add(sum, chi.values[h->conjugacy().class_of[yi]]);
    }
    r.values.push_back(ctx.mul(sum, inv_h));
  }
  return r;
}

/// psi^m(chi)(g) = chi(g^m).
inline ClassFunction adams_cf(const ClassFunction& chi, long long m) {
  require(m >= 1, ErrorKind::precondition, "Adams index must be positive");
  ClassFunction r{chi.group, {}};
  for (std::size_t c = 0; c < chi.group->num_classes(); ++c)
    r.values.push_back(chi.values[chi.group->class_of(chi.group->class_rep(static_cast<int>(c)).pow(m))]);
  return r;
}

/// The c = k/ord(g) in [0,1) with chi(g) = chi(1) * zeta^(k N / ord(g)).
inline Rational central_angle(const CharacterTable& t, std::size_t irr, const Permutation& g) {
  const auto& grp = *t.group();
  const auto& ctx = t.scalars();
  for (const auto& s : grp.generators())
    require(s * g == g * s, ErrorKind::precondition, "central_angle: element is not central");
  const long long ord = g.order();
  const auto& chi = t.row(irr);
  const modp::u64 val = chi.values[grp.class_of(g)];
  const modp::u64 deg = chi.values[0];
  for (long long k = 0; k < ord; ++k)
    if (ctx.mul(deg, ctx.root(k * (ctx.exponent() / ord))) == val) return Rational(k, ord);
  fail(ErrorKind::internal, "central_angle: no root of unity matches (scalar context corrupted)");
}

namespace detail {

inline void sort_and_check(const ScalarContext& ctx, const GroupPtr& g, std::vector<ClassFunction>& rows) {
  std::sort(rows.begin(), rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    long long da = ctx.lift(a.values[0]), db = ctx.lift(b.values[0]);
    if (da != db) return da < db;
    return a.values < b.values;
  });
  require(rows.size() == g->num_classes(), ErrorKind::internal, "character table has wrong number of rows");
  long long sumsq = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long long d = ctx.lift(rows[i].values[0]);
    require(d >= 1, ErrorKind::internal, "non-positive character degree");
    sumsq += d * d;
    for (std::size_t j = i; j < rows.size(); ++j)
      require(inner_product(ctx, rows[i], rows[j]) == (i == j ? 1 : 0), ErrorKind::internal,
              "character table fails orthogonality");
  }
  require(sumsq == static_cast<long long>(g->order()), ErrorKind::internal, "sum of squared degrees != |G|");
}

}  // namespace detail

/// Dixon-Schneider over F_p: simultaneous eigenvectors of the class
/// multiplication matrices are the central characters.
inline TablePtr character_table_dixon(const GroupPtr& g, const ScalarContext& ctx) {
  ctx.check_group(*g);
  using modp::u64;
  const u64 p = ctx.prime();
  const std::size_t k = g->num_classes();
  const auto& cd = g->conjugacy();
  // coeff[j][i][l] = #{x in C_j : x^-1 g_l in C_i}
  std::vector<std::vector<std::vector<u64>>> coeff(k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const int gl = cd.class_reps[l];
    for (std::size_t x = 0; x < g->order(); ++x) {
      int y = g->mul(g->inv(static_cast<int>(x)), gl);
      ++coeff[cd.class_of[x]][cd.class_of[y]][l];
    }
  }
  auto apply = [&](const std::vector<u64>& weights, const std::vector<u64>& v) {
    std::vector<u64> out(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (weights[j] == 0) continue;
      for (std::size_t i = 0; i < k; ++i) {
        u64 acc = 0;
        for (std::size_t l = 0; l < k; ++l)
          if (coeff[j][i][l]) acc = (acc + modp::mulmod(coeff[j][i][l], v[l], p)) % p;
        out[i] = (out[i] + modp::mulmod(weights[j], acc, p)) % p;
      }
    }
    return out;
  };

  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<modp::Matrix> spaces;
  {
    modp::Matrix id(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  auto split = [&](const std::vector<u64>& weights) {
    std::vector<modp::Matrix> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto pivots = modp::rref(basis, p);
      modp::Matrix a(d, std::vector<u64>(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        auto v = apply(weights, basis[s]);
        for (std::size_t r = 0; r < d; ++r) a[r][s] = v[pivots[r]];
      }
      auto roots = modp::poly_roots(modp::char_poly(a, p), p, rng);
      if (roots.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (u64 lam : roots) {
        modp::Matrix shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lam) % p;
        modp::Matrix sub;
        for (const auto& u : modp::nullspace(shifted, p)) {
          std::vector<u64> w(k, 0);
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < k; ++c) w[c] = (w[c] + modp::mulmod(u[r], basis[r][c], p)) % p;
          sub.push_back(std::move(w));
        }
        modp::rref(sub, p);
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  };
  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const modp::Matrix& m) { return m.size() == 1; });
  };
  for (std::size_t j = 1; j < k && !all_split(); ++j) {
    std::vector<u64> w(k, 0);
    w[j] = 1;
    split(w);
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (int attempt = 0; attempt < 64 && !all_split(); ++attempt) {
    std::vector<u64> w(k);
    for (auto& x : w) x = dist(rng);
    split(w);
  }
  require(all_split(), ErrorKind::internal, "Dixon-Schneider failed to separate characters");

  std::vector<ClassFunction> rows;
  const long long root_bound = static_cast<long long>(std::sqrt(static_cast<double>(g->order()))) + 1;
  for (const auto& sp : spaces) {
    std::vector<u64> w = sp[0];
    require(w[0] != 0, ErrorKind::internal, "central character vanishes at identity");
    u64 n0 = ctx.inv(w[0]);
    for (auto& x : w) x = ctx.mul(x, n0);
    u64 s = 0;
    for (std::size_t l = 0; l < k; ++l)
      s = ctx.add(s, ctx.mul(ctx.mul(w[l], w[cd.inverse_class[l]]),
                             ctx.inv(ctx.from_int(static_cast<long long>(cd.class_sizes[l])))));
    u64 dsq = ctx.mul(ctx.from_int(static_cast<long long>(g->order())), ctx.inv(s));
    long long deg = -1;
    for (long long d = 1; d <= root_bound; ++d)
      if (ctx.from_int(d * d) == dsq) {
        deg = d;
        break;
      }
    require(deg > 0, ErrorKind::internal, "could not recover a character degree");
    ClassFunction chi{g, std::vector<u64>(k)};
    for (std::size_t l = 0; l < k; ++l)
      chi.values[l] = ctx.mul(ctx.from_int(deg),
                              ctx.mul(w[l], ctx.inv(ctx.from_int(static_cast<long long>(cd.class_sizes[l])))));
    rows.push_back(std::move(chi));
  }
  detail::sort_and_check(ctx, g, rows);
  return std::make_shared<const CharacterTable>(g, ctx, std::move(rows));
}

/// Abelian fast path: enumerate homomorphisms G -> <zeta> directly.
/// Returns nullptr when the search space is too large.
inline TablePtr character_table_abelian(const GroupPtr& g, const ScalarContext& ctx) {
  ctx.check_group(*g);
  require(g->is_abelian(), ErrorKind::precondition, "group is not abelian");
  using modp::u64;
  const auto& gens = g->generators();
  std::vector<long long> ords;
  long long space = 1;
  for (const auto& s : gens) {
    ords.push_back(s.order());
    space *= ords.back();
    if (space > 1'000'000) return nullptr;
  }
  std::vector<ClassFunction> rows;
  std::vector<long long> choice(gens.size(), 0);
  for (long long t = 0; t < space; ++t) {
    long long rem = t;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      choice[i] = rem % ords[i];
      rem /= ords[i];
    }
    std::vector<u64> val(g->order(), 0);
    std::vector<char> set(g->order(), 0);
    val[0] = 1;
    set[0] = 1;
    std::deque<int> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int y = g->index_of(gens[i] * g->element(x));
        u64 v = ctx.mul(ctx.root(choice[i] * (ctx.exponent() / ords[i])), val[x]);
        if (!set[y]) {
          set[y] = 1;
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    ClassFunction chi{g, std::vector<u64>(g->num_classes())};
    for (std::size_t c = 0; c < g->num_classes(); ++c) chi.values[c] = val[g->conjugacy().class_reps[c]];
    if (std::find(rows.begin(), rows.end(), chi) == rows.end()) rows.push_back(std::move(chi));
  }
  detail::sort_and_check(ctx, g, rows);
  return std::make_shared<const CharacterTable>(g, ctx, std::move(rows));
}

inline TablePtr character_table(const GroupPtr& g, const ScalarContext& ctx) {
  if (g->is_abelian())
    if (auto t = character_table_abelian(g, ctx)) return t;
  return character_table_dixon(g, ctx);
}

}  // namespace qell
