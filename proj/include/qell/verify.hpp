#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qell/json_io.hpp"
#include "qell/qell.hpp"

namespace qell::verify {

struct Check {
  std::string name;
  std::string anchor;  // the claim being checked
  bool passed = true;
  std::string detail;
};

using Checks = std::vector<Check>;

namespace anchor {
inline constexpr const char* cyclic = "Z/N component ring is Z[q^+-][x]/(x^N - q^m)";
inline constexpr const char* sigma3 = "Sigma_3 rings: XY = Y, X^2 = 1, Y^2 = 1 + X + Y; x^2 = q; x^3 = q";
inline constexpr const char* tate = "Tate N-torsion components Spec Z[q^+-][x]/(x^N - q^i)";
inline constexpr const char* kunneth = "Kunneth map is an isomorphism on points";
inline constexpr const char* cog = "QEll_G(G x_H X) = QEll_H(X) is an isomorphism";
inline constexpr const char* transfer = "transfer is a sum over fixed cosets (G/H)^g";
inline constexpr const char* mu = "mu^n is a Lambda-ring homomorphism";
inline constexpr const char* free_action = "free action: QEll_G(X) = QEll(X/G) = Z[q^+-]";
inline constexpr const char* trivial = "trivial H-action: QEll_{GxH}(X) = QEll_G(X) (x) QEll_H(pt)";
inline constexpr const char* characters = "character orthogonality, sum d^2 = |G|, Frobenius reciprocity";
inline constexpr const char* ring = "QEll_G(X) is a commutative ring and pullbacks are ring maps";
}  // namespace anchor

/// Runs `body`; an empty return string is a pass, anything else (or an
/// exception) is a failure with that detail.
inline Check run_check(std::string name, std::string anchor, const std::function<std::string()>& body) {
  Check c{std::move(name), std::move(anchor), true, ""};
  try {
    c.detail = body();
    c.passed = c.detail.empty();
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

inline bool all_passed(const Checks& cs) {
  for (const auto& c : cs)
    if (!c.passed) return false;
  return true;
}

namespace detail {

inline Permutation cycle(std::size_t n, std::vector<Point> pts) { return Permutation::from_cycles(n, {std::move(pts)}); }

inline int linear_with_angle(const LambdaCtx& c, const Rational& a) {
  for (std::size_t i = 0; i < c.rank(); ++i)
    if (c.angle(i) == a && c.degree(i) == 1) return static_cast<int>(i);
  return -1;
}

inline LambdaElt lr_pow(const LambdaElt& x, int k) {
  LambdaElt r = lr_unit(x.ctx);
  for (int i = 0; i < k; ++i) r = lr_mul(r, x);
  return r;
}

inline std::string group_label(const GroupPtr& g) { return g->name() + " (order " + std::to_string(g->order()) + ")"; }

}  // namespace detail

// ---- deterministic reproductions ----

/// For Z/N on a point, every component has rank N and x_m^N = q^m, where
/// x_m is the character sending the generator to exp(2 pi i/N).
inline Checks cyclic_presentation_checks(int max_n = 8) {
  Checks out;
  for (int n = 1; n <= max_n; ++n)
    out.push_back(run_check("x_k^N = q^k, N = " + std::to_string(n), anchor::cyclic, [n]() -> std::string {
      auto g = cyclic_group(n);
      auto session = Session::for_groups({g});
      auto s = qe_structure(session, FiniteGSet::point(g));
      const auto& sc = session->scalars();
      const Permutation gen = n == 1 ? g->element(0) : g->generators()[0];
      const auto zeta = sc.root(sc.exponent() / n);
      for (int m = 0; m < n; ++m) {
        const auto cls = static_cast<std::size_t>(g->class_of(gen.pow(m)));
        const auto& c = s->ctx(cls, 0);
        if (c->rank() != static_cast<std::size_t>(n))
          return "m = " + std::to_string(m) + ": rank " + std::to_string(c->rank());
        int x = -1;
        for (std::size_t i = 0; i < c->rank(); ++i)
          if (c->table().row(i).values[g->class_of(gen)] == zeta) x = static_cast<int>(i);
        if (x < 0) return "m = " + std::to_string(m) + ": no faithful generator character";
        auto power = detail::lr_pow(lr_basis(c, static_cast<std::size_t>(x)), n);
        if (power != lr_q(c, Rational(m))) return "m = " + std::to_string(m) + ": x^N = " + to_string(power);
      }
      return "";
    }));
  return out;
}

inline Checks sigma3_checks() {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto s = qe_structure(session, FiniteGSet::point(s3));
  Checks out;
  // classes: e, (0 1), (0 1 2); irreducibles at e: trivial, sign X, standard Y
  out.push_back(run_check("Sigma_3 relations XY=Y, X^2=1, Y^2=1+X+Y", anchor::sigma3, [&]() -> std::string {
    const auto& c = s->ctx(0, 0);
    if (c->rank() != 3) return "rank " + std::to_string(c->rank());
    const auto one = lr_unit(c), x = lr_basis(c, 1), y = lr_basis(c, 2);
    if (c->degree(1) != 1 || c->degree(2) != 2) return "unexpected irreducible order";
    if (lr_mul(x, y) != y) return "XY = " + to_string(lr_mul(x, y));
    if (lr_mul(x, x) != one) return "X^2 = " + to_string(lr_mul(x, x));
    if (lr_mul(y, y) != lr_add(lr_add(one, x), y)) return "Y^2 = " + to_string(lr_mul(y, y));
    return "";
  }));
  out.push_back(run_check("Sigma_3 component at (12): rank 2, x^2 = q", anchor::sigma3, [&]() -> std::string {
    const auto& c = s->ctx(1, 0);
    if (c->rank() != 2) return "rank " + std::to_string(c->rank());
    int i = detail::linear_with_angle(*c, Rational(1, 2));
    if (i < 0) return "no basis element with angle 1/2";
    auto sq = detail::lr_pow(lr_basis(c, static_cast<std::size_t>(i)), 2);
    if (sq != lr_q(c, Rational(1))) return "x^2 = " + to_string(sq);
    return "";
  }));
  out.push_back(run_check("Sigma_3 component at (123): rank 3, x^3 = q", anchor::sigma3, [&]() -> std::string {
    const auto& c = s->ctx(2, 0);
    if (c->rank() != 3) return "rank " + std::to_string(c->rank());
    int i = detail::linear_with_angle(*c, Rational(1, 3));
    if (i < 0) return "no basis element with angle 1/3";
    auto cube = detail::lr_pow(lr_basis(c, static_cast<std::size_t>(i)), 3);
    if (cube != lr_q(c, Rational(1))) return "x^3 = " + to_string(cube);
    return "";
  }));
  return out;
}

inline Checks tate_checks(int max_n = 8) {
  Checks out;
  for (int n = 1; n <= max_n; ++n)
    out.push_back(run_check("Tate presentation, N = " + std::to_string(n), anchor::tate, [n]() -> std::string {
      for (const auto& r : verify_tate_presentation(n))
        if (!r.passed) return r.name + ": " + r.detail;
      return "";
    }));
  return out;
}

struct NamedGroup {
  std::string label;
  GroupPtr group;
};

inline std::vector<std::pair<NamedGroup, NamedGroup>> kunneth_pairs() {
  return {{{"Z/2", cyclic_group(2)}, {"Z/3", cyclic_group(3)}},
          {{"Z/2", cyclic_group(2)}, {"Z/2", cyclic_group(2)}},
          {{"S3", symmetric_group(3)}, {"Z/2", cyclic_group(2)}}};
}

inline Checks kunneth_point_checks() {
  Checks out;
  for (const auto& [g, h] : kunneth_pairs())
    out.push_back(run_check("Kunneth basis bijection (" + g.label + ", " + h.label + ")", anchor::kunneth,
                            [&]() -> std::string {
                              auto gh = direct_product(g.group, h.group).group;
                              auto session = Session::for_groups({g.group, h.group, gh});
                              Kunneth k(session, g.group, FiniteGSet::point(g.group), h.group,
                                        FiniteGSet::point(h.group));
                              const auto map = kunneth_basis_map(k);  // throws unless a bijection
                              if (map.size() != k.product()->total_rank()) return "image size differs from rank";
                              if (k(qe_unit(k.left()), qe_unit(k.right())) != qe_unit(k.product()))
                                return "1 (x) 1 is not the unit";
                              return "";
                            }));
  return out;
}

// ---- seeded checks ----

struct CogCase {
  std::string label;
  GroupPtr g, h;
};

inline std::vector<CogCase> cog_cases() {
  auto s3 = symmetric_group(3), c4 = cyclic_group(4);
  return {{"(S3, C2)", s3, subgroup(s3, {detail::cycle(3, {0, 1})}, "C2")},
          {"(S3, C3)", s3, subgroup(s3, {detail::cycle(3, {0, 1, 2})}, "C3")},
          {"(Z/4, Z/2)", c4, subgroup(c4, {c4->generators()[0].pow(2)}, "C2")}};
}

/// Round trips forward(inverse(b)) = b and inverse(forward(a)) = a.
inline Checks change_of_group_checks(std::uint64_t seed, int count) {
  Checks out;
  for (const auto& cs : cog_cases())
    for (int regular = 0; regular < 2; ++regular)
      out.push_back(run_check("change of group " + cs.label + ", X = " + (regular ? "regular H-set" : "pt"),
                              anchor::cog, [&, regular]() -> std::string {
                                std::mt19937_64 rng(seed);
                                auto session = Session::for_groups({cs.g});
                                auto x = regular ? FiniteGSet::regular(cs.h) : FiniteGSet::point(cs.h);
                                ChangeOfGroup cg(session, cs.g, cs.h, x);
                                if (cg.over_g()->total_rank() != cg.over_h()->total_rank()) return "ranks differ";
                                for (int i = 0; i < count; ++i) {
                                  auto b = qe_random(cg.over_h(), rng);
                                  if (cg.forward(cg.inverse(b)) != b) return "forward(inverse(b)) != b at sample " + std::to_string(i);
                                  auto a = qe_random(cg.over_g(), rng);
                                  if (cg.inverse(cg.forward(a)) != a) return "inverse(forward(a)) != a at sample " + std::to_string(i);
                                }
                                return "";
                              }));
  return out;
}

/// The explicit coset sum and the change-of-group/pushforward route agree.
inline Checks transfer_agreement_checks(std::uint64_t seed, int count) {
  Checks out;
  for (auto g : {symmetric_group(3), dihedral_group(4)}) {
    auto session = Session::for_groups({g});
    auto pt = qe_structure(session, FiniteGSet::point(g));
    int idx = 0;
    for (const auto& h : two_generated_subgroups(g)) {
      const std::string label = g->name() + " subgroup #" + std::to_string(idx++) + " (order " + std::to_string(h->order()) + ")";
      out.push_back(run_check("transfer algorithms agree, " + label, anchor::transfer, [&]() -> std::string {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(idx));
        auto hs = qe_structure(session, FiniteGSet::point(h));
        for (int i = 0; i < count; ++i) {
          auto b = qe_random(hs, rng);
          if (qe_transfer_a(pt, h, b) != qe_transfer_b(pt, b)) return "A != B at sample " + std::to_string(i);
        }
        return "";
      }));
    }
  }
  return out;
}

/// Transfer of 1 from C3 and C2 into S3, by both algorithms.
inline Checks transfer_worked_checks() {
  Checks out;
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto pt = qe_structure(session, FiniteGSet::point(s3));
  auto c3 = subgroup(s3, {detail::cycle(3, {0, 1, 2})}, "C3");
  auto c2 = subgroup(s3, {detail::cycle(3, {0, 1})}, "C2");
  for (int alg = 0; alg < 2; ++alg) {
    const std::string tag = alg == 0 ? "A" : "B";
    auto tr = [&](const GroupPtr& h) {
      auto u = qe_unit(qe_structure(session, FiniteGSet::point(h)));
      return alg == 0 ? qe_transfer_a(pt, h, u) : qe_transfer_b(pt, u);
    };
    out.push_back(run_check("I(C3 -> S3)(1) = (1+X, 0, 2), algorithm " + tag, anchor::transfer, [&]() -> std::string {
      auto t = tr(c3);
      const auto& e = pt->ctx(0, 0);
      if (t.at(0, 0) != lr_add(lr_unit(e), lr_basis(e, 1))) return "e component " + to_string(t.at(0, 0));
      if (!t.at(1, 0).is_zero()) return "(12) component " + to_string(t.at(1, 0));
      if (t.at(2, 0) != lr_scale(2, lr_unit(pt->ctx(2, 0)))) return "(123) component " + to_string(t.at(2, 0));
      return "";
    }));
    out.push_back(run_check("I(C2 -> S3)(1) = (1+Y, 1, 0), algorithm " + tag, anchor::transfer, [&]() -> std::string {
      auto t = tr(c2);
      const auto& e = pt->ctx(0, 0);
      if (t.at(0, 0) != lr_add(lr_unit(e), lr_basis(e, 2))) return "e component " + to_string(t.at(0, 0));
      if (t.at(1, 0) != lr_unit(pt->ctx(1, 0))) return "(12) component " + to_string(t.at(1, 0));
      if (!t.at(2, 0).is_zero()) return "(123) component " + to_string(t.at(2, 0));
      return "";
    }));
  }
  return out;
}

/// mu^1 = id, mu^n multiplicative, and mu^n commutes with lambda^k (k <= 2).
inline Checks mu_checks(std::uint64_t seed, int count) {
  Checks out;
  for (auto g : {symmetric_group(3), cyclic_group(4)}) {
    auto session = Session::for_groups({g});
    auto s = qe_structure(session, FiniteGSet::point(g));
    for (int n = 1; n <= 3; ++n)
      out.push_back(run_check("mu^" + std::to_string(n) + " on " + detail::group_label(g), anchor::mu, [&, n]() -> std::string {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
        for (int i = 0; i < count; ++i) {
          auto a = qe_random(s, rng), b = qe_random(s, rng);
          const auto ma = qe_mu(n, a);
          if (n == 1 && ma != a) return "mu^1(a) != a at sample " + std::to_string(i);
          if (qe_mu(n, qe_mul(a, b)) != qe_mul(ma, qe_mu(n, b))) return "not multiplicative at sample " + std::to_string(i);
          for (int k = 0; k <= 2; ++k)
            if (qe_mu(n, qe_exterior(a, k)) != qe_exterior(ma, k))
              return "does not commute with lambda^" + std::to_string(k) + " at sample " + std::to_string(i);
        }
        return "";
      }));
  }
  return out;
}

inline Checks free_action_checks(std::uint64_t seed, int count) {
  Checks out;
  for (auto g : {cyclic_group(2), symmetric_group(3)})
    out.push_back(run_check("free action, regular " + detail::group_label(g), anchor::free_action, [&]() -> std::string {
      auto session = Session::for_groups({g});
      auto s = qe_structure(session, FiniteGSet::regular(g));
      if (s->total_rank() != 1) return "total rank " + std::to_string(s->total_rank());
      if (s->rank(0) != 1) return "identity component rank " + std::to_string(s->rank(0));
      if (qe_free_quotient(qe_unit(s)) != std::vector<QLaurent>{QLaurent(1)}) return "unit does not map to 1";
      std::mt19937_64 rng(seed);
      for (int i = 0; i < count; ++i) {
        auto a = qe_random(s, rng), b = qe_random(s, rng);
        auto fa = qe_free_quotient(a), fb = qe_free_quotient(b), fab = qe_free_quotient(qe_mul(a, b));
        if (fab.size() != 1 || fab[0] != fa[0] * fb[0]) return "quotient map not multiplicative";
        if (qe_basis(s, 0, 0, 0, fa[0]) != a) return "quotient map not injective";
      }
      return "";
    }));
  out.push_back(run_check("trivial-action split round trip (Z/2, Z/3)", anchor::trivial, [&]() -> std::string {
    auto c2 = cyclic_group(2), c3 = cyclic_group(3);
    auto session = Session::for_groups({c2, c3, direct_product(c2, c3).group});
    std::mt19937_64 rng(seed);
    for (const auto& x : {FiniteGSet::point(c2), FiniteGSet::regular(c2)}) {
      Kunneth k(session, c2, x, c3, FiniteGSet::point(c3));
      for (int i = 0; i < count; ++i) {
        auto e = qe_random(k.product(), rng);
        if (qe_split_recombine(k, qe_trivial_split(k, e)) != e) return "round trip failed at sample " + std::to_string(i);
      }
    }
    return "";
  }));
  return out;
}

/// Builtin groups of order at most `max_order`.
inline std::vector<GroupPtr> builtin_groups(std::size_t max_order) {
  std::vector<GroupPtr> out;
  std::size_t fact = 1;
  for (int n = 1; (fact *= static_cast<std::size_t>(n)) <= max_order; ++n) out.push_back(symmetric_group(n));
  fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= static_cast<std::size_t>(n);
    if (n >= 3 && fact / 2 <= max_order) out.push_back(alternating_group(n));
  }
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back(cyclic_group(static_cast<int>(n)));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) out.push_back(dihedral_group(static_cast<int>(n)));
  return out;
}

/// Row and column orthogonality, sum of squared degrees, and Frobenius
/// reciprocity for every centralizer and cyclic subgroup of a class rep.
inline std::string character_properties(const GroupPtr& g) {
  auto session = Session::for_groups({g});
  const auto& sc = session->scalars();
  auto t = session->table(g);
  long long sumsq = 0;
  for (auto d : t->degrees()) sumsq += d * d;
  if (sumsq != static_cast<long long>(g->order())) return "sum of squared degrees " + std::to_string(sumsq);
  if (t->size() != g->num_classes()) return "table is not square";
  for (std::size_t i = 0; i < t->size(); ++i)
    for (std::size_t j = 0; j < t->size(); ++j)
      if (inner_product(sc, t->row(i), t->row(j)) != (i == j ? 1 : 0))
        return "row orthogonality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  const auto& cd = g->conjugacy();
  for (std::size_t a = 0; a < t->size(); ++a)
    for (std::size_t b = 0; b < t->size(); ++b) {
      modp::u64 s = 0;
      for (const auto& row : t->rows()) s = sc.add(s, sc.mul(row.values[a], row.values[cd.inverse_class[b]]));
      const long long expect = a == b ? static_cast<long long>(g->order() / cd.class_sizes[a]) : 0;
      if (sc.lift(s) != expect) return "column orthogonality fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  std::vector<GroupPtr> subs;
  auto add_subgroup = [&](GroupPtr h) {
    for (const auto& k : subs)
      if (k->same_elements(*h)) return;
    subs.push_back(std::move(h));
  };
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    const auto& rep = g->class_rep(static_cast<int>(c));
    add_subgroup(centralizer_group(*g, rep));
    if (!rep.is_identity()) add_subgroup(subgroup(g, {rep}));
  }
  for (const auto& h : subs) {
    auto th = session->table(h);
    auto inc = GroupHom::inclusion(h, g);
    std::vector<ClassFunction> restricted;
    for (const auto& psi : t->rows()) restricted.push_back(restrict_cf(inc, psi));
    for (const auto& chi : th->rows()) {
      const auto induced = induce_cf(sc, g, chi);
      for (std::size_t j = 0; j < t->size(); ++j)
        if (inner_product(sc, induced, t->row(j)) != inner_product(sc, chi, restricted[j]))
          return "Frobenius reciprocity fails for a subgroup of order " + std::to_string(h->order());
    }
  }
  return "";
}

inline Checks character_checks(std::size_t max_order = 48) {
  Checks out;
  for (const auto& g : builtin_groups(max_order))
    out.push_back(run_check("character table of " + detail::group_label(g), anchor::characters,
                            [&] { return character_properties(g); }));
  return out;
}

/// Ring axioms, pullback ring maps and the Kunneth ring map on random elements.
inline Checks ring_checks(std::uint64_t seed, int count) {
  Checks out;
  auto s3 = symmetric_group(3), d4 = dihedral_group(4), c2 = cyclic_group(2);
  struct Case {
    std::string label;
    GroupPtr g;
    FiniteGSet x;
  };
  for (const auto& cs : {Case{"S3 on 3 points", s3, FiniteGSet::natural(s3)}, Case{"D4 on 4 points", d4, FiniteGSet::natural(d4)},
                         Case{"Z/2 regular", c2, FiniteGSet::regular(c2)}})
    out.push_back(run_check("ring axioms, " + cs.label, anchor::ring, [&]() -> std::string {
      auto session = Session::for_groups({cs.g});
      auto s = qe_structure(session, cs.x);
      std::mt19937_64 rng(seed);
      for (int i = 0; i < count; ++i) {
        auto a = qe_random(s, rng), b = qe_random(s, rng), c = qe_random(s, rng);
        if (qe_mul(qe_mul(a, b), c) != qe_mul(a, qe_mul(b, c))) return "not associative";
        if (qe_mul(a, b) != qe_mul(b, a)) return "not commutative";
        if (qe_mul(a, qe_add(b, c)) != qe_add(qe_mul(a, b), qe_mul(a, c))) return "not distributive";
        if (qe_mul(a, qe_unit(s)) != a) return "unit is not neutral";
        if (!qe_sub(a, a).is_zero()) return "a - a != 0";
        // every subgroup inclusion pulls back to a ring map
        for (const auto& h : two_generated_subgroups(cs.g)) {
          auto inc = GroupHom::inclusion(h, cs.g);
          if (qe_pullback_hom(inc, qe_mul(a, b)) != qe_mul(qe_pullback_hom(inc, a), qe_pullback_hom(inc, b)))
            return "pullback to a subgroup of order " + std::to_string(h->order()) + " is not multiplicative";
        }
      }
      return "";
    }));
  out.push_back(run_check("Kunneth map is a ring map, S3 on 3 points x Z/2 regular", anchor::kunneth, [&]() -> std::string {
    auto session = Session::for_groups({s3, c2, direct_product(s3, c2).group});
    Kunneth k(session, s3, FiniteGSet::natural(s3), c2, FiniteGSet::regular(c2));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
      auto a = qe_random(k.left(), rng), a2 = qe_random(k.left(), rng);
      auto b = qe_random(k.right(), rng), b2 = qe_random(k.right(), rng);
      if (qe_mul(k(a, b), k(a2, b2)) != k(qe_mul(a, a2), qe_mul(b, b2))) return "not multiplicative";
    }
    return "";
  }));
  return out;
}

// ---- suites ----

inline constexpr std::uint64_t kReproductionSeed = 20160;
inline constexpr int kSamples = 50;

/// Deterministic reproductions of the worked algebra.
inline Checks reproduction_suite() {
  Checks out;
  auto add = [&](Checks cs) { out.insert(out.end(), cs.begin(), cs.end()); };
  add(cyclic_presentation_checks());
  add(sigma3_checks());
  add(tate_checks());
  add(kunneth_point_checks());
  add(change_of_group_checks(kReproductionSeed, kSamples));
  add(transfer_worked_checks());
  add(free_action_checks(kReproductionSeed, 10));
  return out;
}

/// Seeded randomized property checks.
inline Checks props_suite(std::uint64_t seed) {
  Checks out;
  auto add = [&](Checks cs) { out.insert(out.end(), cs.begin(), cs.end()); };
  add(ring_checks(seed, 10));
  add(change_of_group_checks(seed, kSamples));
  add(transfer_agreement_checks(seed, kSamples));
  add(mu_checks(seed, kSamples));
  add(free_action_checks(seed, kSamples));
  add(character_checks(48));
  return out;
}

inline io::ReportDoc run_suite(const std::string& suite, std::uint64_t seed) {
  require(suite == "paper" || suite == "props" || suite == "all", ErrorKind::precondition, "unknown suite " + suite);
  io::ReportDoc r;
  r.suite = suite;
  r.seed = seed;
  Checks cs;
  if (suite == "paper" || suite == "all") {
    auto p = reproduction_suite();
    cs.insert(cs.end(), p.begin(), p.end());
  }
  if (suite == "props" || suite == "all") {
    auto p = props_suite(seed);
    cs.insert(cs.end(), p.begin(), p.end());
  }
  for (auto& c : cs) r.checks.push_back({std::move(c.name), std::move(c.anchor), c.passed, std::move(c.detail)});
  r.passed = true;
  for (const auto& c : r.checks) r.passed = r.passed && c.passed;
  return r;
}

}  // namespace qell::verify
