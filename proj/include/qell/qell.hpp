#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qell/inertia.hpp"
#include "qell/lambda.hpp"

namespace qell {

// QEll_G(X) = prod over classes [g] of K_{Lambda_G(g)}(X^g). An equivariant
// bundle on a finite C_G(g)-set is determined by its fibers at orbit reps,
// each a representation of Lambda_{Stab(x)}(g), so an element is stored as
// one LambdaElt per (class, orbit). The fiber at any other point z of the
// orbit is the rep's fiber moved by the cached transport t (t * rep == z).

class QEllStructure {
 public:
  QEllStructure(SessionPtr session, GSetPtr x) : session_(std::move(session)), x_(std::move(x)) {
    skeleton_ = inertia_skeleton(*x_);
    for (const auto& en : skeleton_.entries) {
      std::vector<LambdaCtxPtr> row;
      for (const auto& o : en.orbits) row.push_back(session_->lambda_ctx(o.stabilizer, en.g));
      ctxs_.push_back(std::move(row));
    }
  }

  const SessionPtr& session() const noexcept { return session_; }
  const GroupPtr& group() const noexcept { return x_->group(); }
  const GSetPtr& gset() const noexcept { return x_; }
  const InertiaSkeleton& skeleton() const noexcept { return skeleton_; }
  const InertiaEntry& entry(std::size_t cls) const { return skeleton_.entries.at(cls); }
  std::size_t num_classes() const noexcept { return skeleton_.entries.size(); }
  std::size_t num_orbits(std::size_t cls) const { return ctxs_.at(cls).size(); }
  const LambdaCtxPtr& ctx(std::size_t cls, std::size_t orbit) const { return ctxs_.at(cls).at(orbit); }

  std::size_t rank(std::size_t cls) const {
    std::size_t r = 0;
    for (const auto& c : ctxs_.at(cls)) r += c->rank();
    return r;
  }
  std::size_t total_rank() const {
    std::size_t r = 0;
    for (std::size_t c = 0; c < num_classes(); ++c) r += rank(c);
    return r;
  }

  bool same_as(const QEllStructure& o) const { return this == &o || *x_ == *o.x_; }

 private:
  SessionPtr session_;
  GSetPtr x_;
  InertiaSkeleton skeleton_;
  std::vector<std::vector<LambdaCtxPtr>> ctxs_;
};

using QEllStructPtr = std::shared_ptr<const QEllStructure>;

inline QEllStructPtr qe_structure(SessionPtr session, const FiniteGSet& x) {
  return std::make_shared<const QEllStructure>(std::move(session), std::make_shared<const FiniteGSet>(x));
}

inline QEllStructPtr qe_structure(SessionPtr session, GSetPtr x) {
  return std::make_shared<const QEllStructure>(std::move(session), std::move(x));
}

struct QEllElt {
  QEllStructPtr structure;
  std::vector<std::vector<LambdaElt>> comps;  // [class][orbit]

  const LambdaElt& at(std::size_t cls, std::size_t orbit) const { return comps.at(cls).at(orbit); }

  bool is_zero() const {
    for (const auto& row : comps)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const QEllElt& a, const QEllElt& b) {
    return a.structure->same_as(*b.structure) && a.comps == b.comps;
  }
};

namespace detail {

inline void same_structure(const QEllElt& a, const QEllElt& b) {
  require(a.structure->same_as(*b.structure), ErrorKind::precondition, "QEll structure mismatch");
}

template <class F>
QEllElt build(const QEllStructPtr& s, F&& f) {
  QEllElt out{s, {}};
  for (std::size_t c = 0; c < s->num_classes(); ++c) {
    std::vector<LambdaElt> row;
    for (std::size_t o = 0; o < s->num_orbits(c); ++o) row.push_back(f(c, o));
    out.comps.push_back(std::move(row));
  }
  return out;
}

template <class F>
QEllElt map1(const QEllElt& a, F&& f) {
  return build(a.structure, [&](std::size_t c, std::size_t o) { return f(a.comps[c][o]); });
}

template <class F>
QEllElt map2(const QEllElt& a, const QEllElt& b, F&& f) {
  same_structure(a, b);
  return build(a.structure, [&](std::size_t c, std::size_t o) { return f(a.comps[c][o], b.comps[c][o]); });
}

/// The fiber of `a` at the point z of Y^sigma (sigma the rep of class cls),
/// pulled back to `result` along psi: result group -> Stab(z) with
/// psi(result element) == sigma.
inline LambdaElt fiber(const QEllElt& a, std::size_t cls, int z, const LambdaCtxPtr& result,
                       const std::function<Permutation(const Permutation&)>& psi) {
  const auto& en = a.structure->entry(cls);
  const int oi = en.orbit_of.at(z);
  require(oi >= 0, ErrorKind::internal, "pullback point is not fixed by the class rep");
  const auto& src = a.comps[cls][oi];
  const Permutation& t = en.transport_to(z);
  const Permutation tinv = t.inverse();
  const auto& stab = *src.ctx->group();
  return lr_pullback(
      result,
      [&](const Permutation& p) {
        Permutation y = tinv * psi(p) * t;
        require(stab.contains(y), ErrorKind::internal, "pullback does not land in the stabilizer");
        return y;
      },
      src);
}

}  // namespace detail

inline QEllElt qe_zero(const QEllStructPtr& s) {
  return detail::build(s, [&](std::size_t c, std::size_t o) { return lr_zero(s->ctx(c, o)); });
}

inline QEllElt qe_unit(const QEllStructPtr& s) {
  return detail::build(s, [&](std::size_t c, std::size_t o) { return lr_unit(s->ctx(c, o)); });
}

/// q^r in every component.
inline QEllElt qe_q(const QEllStructPtr& s, const Rational& r) {
  return detail::build(s, [&](std::size_t c, std::size_t o) { return lr_q(s->ctx(c, o), r); });
}

/// The element with a single coefficient at (class, orbit, basis index).
inline QEllElt qe_basis(const QEllStructPtr& s, std::size_t cls, std::size_t orbit, std::size_t index,
                        QLaurent coeff = 1) {
  QEllElt e = qe_zero(s);
  e.comps.at(cls).at(orbit) = lr_basis(s->ctx(cls, orbit), index, std::move(coeff));
  return e;
}

inline QEllElt qe_add(const QEllElt& a, const QEllElt& b) { return detail::map2(a, b, lr_add); }
inline QEllElt qe_sub(const QEllElt& a, const QEllElt& b) { return detail::map2(a, b, lr_sub); }
inline QEllElt qe_mul(const QEllElt& a, const QEllElt& b) { return detail::map2(a, b, lr_mul); }
inline QEllElt qe_scale(const QLaurent& f, const QEllElt& a) {
  return detail::map1(a, [&](const LambdaElt& e) { return lr_scale(f, e); });
}
inline QEllElt qe_adams(const QEllElt& a, long long m) {
  return detail::map1(a, [&](const LambdaElt& e) { return lr_adams(e, m); });
}
inline QEllElt qe_exterior(const QEllElt& a, int k) {
  return detail::map1(a, [&](const LambdaElt& e) { return lr_exterior(e, k); });
}

/// Random element with integer q-exponents in [-2, 2] and small coefficients;
/// roughly half the coefficients are zero.
inline QEllElt qe_random(const QEllStructPtr& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1), expo(-2, 2), coef(-3, 3), nterms(1, 2);
  return detail::build(s, [&](std::size_t c, std::size_t o) {
    LambdaElt e = lr_zero(s->ctx(c, o));
    for (auto& f : e.coeffs) {
      if (coin(rng) == 0) continue;
      for (int k = nterms(rng); k > 0; --k) f += QLaurent::monomial(coef(rng), Rational(expo(rng)));
    }
    return e;
  });
}

using PointMap = std::function<int(int)>;

/// (phi, f)^* for phi: G -> H and a G-map f: X -> phi^* Y, from QEll_H(Y)
/// to QEll_G(X). The component at tau reads the H-component at the class
/// sigma of phi(tau): with u sigma u^-1 = phi(tau), the fiber at x0 is the
/// source fiber at u^-1 f(x0), restricted along s -> u^-1 phi(s) u.
inline QEllElt qe_pullback(const QEllStructPtr& result, const GroupHom& phi, const PointMap& f, const QEllElt& a) {
  const auto& g = result->group();
  const auto& h = a.structure->group();
  require(phi.domain()->same_elements(*g), ErrorKind::precondition, "pullback: hom domain is not the result group");
  require(phi.codomain()->same_elements(*h), ErrorKind::precondition, "pullback: hom codomain is not the source group");
  const auto& x = *result->gset();
  const auto& y = *a.structure->gset();
  for (std::size_t p = 0; p < x.size(); ++p) {
    const int fp = f(static_cast<int>(p));
    require(fp >= 0 && static_cast<std::size_t>(fp) < y.size(), ErrorKind::precondition, "point map out of range");
    for (const auto& s : g->generators())
      require(f(x.act(s, static_cast<int>(p))) == y.act(phi(s), fp), ErrorKind::precondition,
              "point map is not equivariant");
  }
  return detail::build(result, [&](std::size_t c, std::size_t o) {
    const auto& en = result->entry(c);
    const Permutation target = phi(en.g);
    const int sigma = h->class_of(target);
    const Permutation u = conjugator(*h, h->class_rep(sigma), target);
    const Permutation uinv = u.inverse();
    const int z = y.act(uinv, f(en.orbits[o].rep));
    return detail::fiber(a, static_cast<std::size_t>(sigma), z, result->ctx(c, o),
                         [&](const Permutation& s) { return uinv * phi(s) * u; });
  });
}

/// phi^*: QEll_H(Y) -> QEll_G(phi^* Y).
inline QEllElt qe_pullback_hom(const GroupHom& phi, const QEllElt& a) {
  auto result = qe_structure(a.structure->session(), FiniteGSet::restrict_along(phi, *a.structure->gset()));
  return qe_pullback(result, phi, [](int p) { return p; }, a);
}

/// f^*: QEll_G(Y) -> QEll_G(X) for an equivariant f: X -> Y.
inline QEllElt qe_pullback_map(const QEllStructPtr& result, const PointMap& f, const QEllElt& a) {
  return qe_pullback(result, GroupHom::identity(result->group()), f, a);
}

/// mu^n: the component at g is the component at g^n restricted to X^g and
/// to the stabilizers there, then moved along RLambda_S(g^n) ->
/// RLambda_S(g)[q^(1/n)].
inline QEllElt qe_mu(long long n, const QEllElt& a) {
  require(n >= 1, ErrorKind::precondition, "mu index must be positive");
  const auto& s = a.structure;
  const auto& grp = *s->group();
  Session& session = *s->session();
  return detail::build(s, [&](std::size_t c, std::size_t o) {
    const auto& en = s->entry(c);
    const auto& orb = en.orbits[o];
    const Permutation gn = en.g.pow(n);
    const int sigma = grp.class_of(gn);
    const Permutation u = conjugator(grp, grp.class_rep(sigma), gn);
    const Permutation uinv = u.inverse();
    const int z = s->gset()->act(uinv, orb.rep);
    auto mid = session.lambda_ctx(orb.stabilizer, gn);
    auto restricted = detail::fiber(a, static_cast<std::size_t>(sigma), z, mid,
                                    [&](const Permutation& p) { return uinv * p * u; });
    return lr_mu_transport(s->ctx(c, o), restricted, n);
  });
}

/// Change of group for H <= G and an H-set X: QEll_G(G x_H X) <-> QEll_H(X).
class ChangeOfGroup {
 public:
  ChangeOfGroup(const SessionPtr& session, GroupPtr g, GroupPtr h, const FiniteGSet& x)
      : g_(std::move(g)), h_(std::move(h)), induced_(induced_gset(g_, h_, x)) {
    over_h_ = qe_structure(session, x);
    over_g_ = qe_structure(session, induced_.set);
  }

  const QEllStructPtr& over_g() const noexcept { return over_g_; }
  const QEllStructPtr& over_h() const noexcept { return over_h_; }
  const InducedGSet& induced() const noexcept { return induced_; }

  /// Restrict to H, then pull back along i(x) = [e, x].
  QEllElt forward(const QEllElt& a) const {
    require(a.structure->same_as(*over_g_), ErrorKind::precondition, "element is not over G x_H X");
    return qe_pullback(over_h_, GroupHom::inclusion(h_, g_), [this](int p) { return induced_.embed(p); }, a);
  }

  /// At p0 = [a, x] in (G x_H X)^sigma: tau' = a^-1 sigma a lies in H and
  /// fixes x; with v tau v^-1 = tau' (tau an H-class rep) the fiber is the
  /// H-fiber at v^-1 x restricted along k -> (a v)^-1 k (a v).
  QEllElt inverse(const QEllElt& b) const {
    require(b.structure->same_as(*over_h_), ErrorKind::precondition, "element is not over (H, X)");
    return detail::build(over_g_, [&](std::size_t c, std::size_t o) {
      const auto& en = over_g_->entry(c);
      auto [ai, x] = induced_.reps[en.orbits[o].rep];
      const Permutation& a = g_->element(ai);
      const Permutation tau_p = a.inverse() * en.g * a;
      const int tau = h_->class_of(tau_p);
      const Permutation v = conjugator(*h_, h_->class_rep(tau), tau_p);
      const Permutation av = a * v;
      const Permutation av_inv = av.inverse();
      const int z = over_h_->gset()->act(v.inverse(), x);
      return detail::fiber(b, static_cast<std::size_t>(tau), z, over_g_->ctx(c, o),
                           [&](const Permutation& k) { return av_inv * k * av; });
    });
  }

 private:
  GroupPtr g_, h_;
  InducedGSet induced_;
  QEllStructPtr over_h_, over_g_;
};

/// Push forward along a G-map pi: Y -> X with finite fibers. The fiber at
/// x0 in X^sigma is the sum over Stab(x0)-orbits of points y in Y^sigma
/// above x0 of Ind from Stab(y) of the fiber at y.
inline QEllElt qe_pushforward(const QEllStructPtr& result, const PointMap& pi, const QEllElt& c) {
  const auto& ys = *c.structure;
  require(ys.group()->same_elements(*result->group()), ErrorKind::precondition, "pushforward needs one group");
  Session& session = *result->session();
  return detail::build(result, [&](std::size_t cls, std::size_t o) {
    const auto& en = result->entry(cls);
    const auto& x0 = en.orbits[o];
    const auto& yen = ys.entry(cls);
    std::vector<int> above;
    for (int y : yen.fixed)
      if (pi(y) == x0.rep) above.push_back(y);
    LambdaElt sum = lr_zero(result->ctx(cls, o));
    for (auto& od : orbits_with_stabilizers(*ys.gset(), x0.stabilizer->elements(), above)) {
      auto stab = od.stabilizer.size() == x0.stabilizer->order()
                      ? x0.stabilizer
                      : FiniteGroup::from_closed_set(ys.group()->degree(), std::move(od.stabilizer), "Stab");
      auto fiber = detail::fiber(c, cls, od.rep, session.lambda_ctx(stab, en.g), [](const Permutation& p) { return p; });
      sum = lr_add(sum, lr_induce(result->ctx(cls, o), fiber));
    }
    return sum;
  });
}

/// Transfer QEll_H(X) -> QEll_G(X) for a G-set X, as the inverse
/// change-of-group into QEll_G(G x_H X) followed by pushforward along the
/// covering [g, x] -> g x.
inline QEllElt qe_transfer_a(const QEllStructPtr& result, const GroupPtr& h, const QEllElt& b) {
  const auto& g = result->group();
  const auto& x = *result->gset();
  auto xh = FiniteGSet::restrict_along(GroupHom::inclusion(h, g), x);
  require(*b.structure->gset() == xh, ErrorKind::precondition, "element is not over X restricted to H");
  ChangeOfGroup cog(result->session(), g, h, xh);
  const auto& ind = cog.induced();
  auto lifted = cog.inverse(b);
  return qe_pushforward(
      result,
      [&](int p) {
        auto [ai, xp] = ind.reps[p];
        return x.act(ai, xp);
      },
      lifted);
}

/// Transfer for X = pt by the explicit sum: at g, sum over H-classes [h]
/// with r h r^-1 = g of Ind from r C_H(h) r^-1 of the conjugated
/// H-component; zero when no element of H is conjugate to g.
inline QEllElt qe_transfer_b(const QEllStructPtr& result, const QEllElt& b) {
  require(result->gset()->size() == 1 && b.structure->gset()->size() == 1, ErrorKind::precondition,
          "explicit transfer sum needs X = pt");
  const auto& g = result->group();
  const auto& h = b.structure->group();
  require(h->is_subgroup_of(*g), ErrorKind::precondition, h->name() + " is not a subgroup of " + g->name());
  Session& session = *result->session();
  return detail::build(result, [&](std::size_t c, std::size_t o) {
    const auto& gc = result->entry(c).g;
    LambdaElt sum = lr_zero(result->ctx(c, o));
    for (std::size_t hc = 0; hc < h->num_classes(); ++hc) {
      const auto& hr = h->class_rep(static_cast<int>(hc));
      if (g->class_of(hr) != static_cast<int>(c)) continue;
      const Permutation r = conjugator(*g, hr, gc);
      sum = lr_add(sum, lr_induce(result->ctx(c, o), lr_conjugate(session, b.at(hc, 0), r)));
    }
    return sum;
  });
}

/// Kunneth map QEll_G(X) (x) QEll_H(Y) -> QEll_{GxH}(X x Y): the product of
/// the pullbacks along the two projections.
class Kunneth {
 public:
  Kunneth(const SessionPtr& session, GroupPtr g, const FiniteGSet& x, GroupPtr h, const FiniteGSet& y)
      : dp_(direct_product(std::move(g), std::move(h))) {
    left_ = qe_structure(session, x);
    right_ = qe_structure(session, y);
    product_ = qe_structure(session, FiniteGSet::product(dp_, x, y));
    auto d = dp_;
    pl_ = std::make_shared<GroupHom>(GroupHom::from_function(
        dp_.group, dp_.left, [d](const Permutation& p) { return d.project_left(p); }));
    pr_ = std::make_shared<GroupHom>(GroupHom::from_function(
        dp_.group, dp_.right, [d](const Permutation& p) { return d.project_right(p); }));
  }

  const DirectProduct& product_group() const noexcept { return dp_; }
  const QEllStructPtr& left() const noexcept { return left_; }
  const QEllStructPtr& right() const noexcept { return right_; }
  const QEllStructPtr& product() const noexcept { return product_; }

  QEllElt operator()(const QEllElt& a, const QEllElt& b) const {
    require(a.structure->same_as(*left_) && b.structure->same_as(*right_), ErrorKind::precondition,
            "Kunneth factors do not match");
    const int ny = static_cast<int>(right_->gset()->size());
    auto pa = qe_pullback(product_, *pl_, [ny](int p) { return p / ny; }, a);
    auto pb = qe_pullback(product_, *pr_, [ny](int p) { return p % ny; }, b);
    return qe_mul(pa, pb);
  }

 private:
  DirectProduct dp_;
  QEllStructPtr left_, right_, product_;
  std::shared_ptr<GroupHom> pl_, pr_;
};

/// Where a basis pair lands under the Kunneth map: q^shift times a product
/// basis element.
struct KunnethImage {
  std::size_t cls = 0, orbit = 0, index = 0;
  Rational shift;
};

/// Images of all basis pairs, keyed by (left cls, orbit, index, right cls,
/// orbit, index). Throws unless each image is a single q-monomial multiple
/// of a basis element and the images are pairwise distinct and exhaust the
/// product basis.
inline std::map<std::vector<std::size_t>, KunnethImage> kunneth_basis_map(const Kunneth& k) {
  const auto &l = *k.left(), &r = *k.right(), &p = *k.product();
  std::map<std::vector<std::size_t>, KunnethImage> out;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> hit;
  for (std::size_t lc = 0; lc < l.num_classes(); ++lc)
    for (std::size_t lo = 0; lo < l.num_orbits(lc); ++lo)
      for (std::size_t li = 0; li < l.ctx(lc, lo)->rank(); ++li)
        for (std::size_t rc = 0; rc < r.num_classes(); ++rc)
          for (std::size_t ro = 0; ro < r.num_orbits(rc); ++ro)
            for (std::size_t ri = 0; ri < r.ctx(rc, ro)->rank(); ++ri) {
              auto img = k(qe_basis(k.left(), lc, lo, li), qe_basis(k.right(), rc, ro, ri));
              std::optional<KunnethImage> found;
              for (std::size_t c = 0; c < p.num_classes(); ++c)
                for (std::size_t o = 0; o < p.num_orbits(c); ++o)
                  for (std::size_t i = 0; i < p.ctx(c, o)->rank(); ++i) {
                    const auto& f = img.comps[c][o].coeffs[i];
                    if (f.is_zero()) continue;
                    require(!found && f.terms().size() == 1 && f.terms().begin()->second == 1, ErrorKind::verification,
                            "Kunneth image of a basis pair is not a basis element up to q-shift");
                    found = KunnethImage{c, o, i, f.terms().begin()->first};
                  }
              require(found.has_value(), ErrorKind::verification, "Kunneth image of a basis pair is zero");
              require(hit.emplace(found->cls, found->orbit, found->index).second, ErrorKind::verification,
                      "two basis pairs have the same Kunneth image");
              out.emplace(std::vector<std::size_t>{lc, lo, li, rc, ro, ri}, *found);
            }
  require(hit.size() == p.total_rank(), ErrorKind::verification, "Kunneth images do not exhaust the product basis");
  return out;
}

/// One term a (x) b of a factored element.
struct SplitTerm {
  QEllElt left, right;
};

/// QEll_{GxH}(X) with H acting trivially, written as a sum of Kunneth
/// images from QEll_G(X) (x) QEll_H(pt). `k` must be built over (G, X, H, pt).
inline std::vector<SplitTerm> qe_trivial_split(const Kunneth& k, const QEllElt& e) {
  const auto& dp = k.product_group();
  const auto& x = *e.structure->gset();
  for (const auto& s : dp.right->generators())
    for (std::size_t p = 0; p < x.size(); ++p)
      require(x.act(dp.embed_right(s), static_cast<int>(p)) == static_cast<int>(p), ErrorKind::precondition,
              "H-action not trivial");
  require(k.right()->gset()->size() == 1 && e.structure->same_as(*k.product()), ErrorKind::precondition,
          "split needs the Kunneth data of (G, X) and (H, pt)");
  std::vector<SplitTerm> out;
  for (const auto& [key, img] : kunneth_basis_map(k)) {
    const auto& f = e.comps[img.cls][img.orbit].coeffs[img.index];
    if (f.is_zero()) continue;
    out.push_back({qe_basis(k.left(), key[0], key[1], key[2], f.shifted(-img.shift)),
                   qe_basis(k.right(), key[3], key[4], key[5])});
  }
  return out;
}

inline QEllElt qe_split_recombine(const Kunneth& k, const std::vector<SplitTerm>& terms) {
  QEllElt sum = qe_zero(k.product());
  for (const auto& t : terms) sum = qe_add(sum, k(t.left, t.right));
  return sum;
}

/// For a free action only the identity component survives, with one
/// trivial-stabilizer orbit per point of X/G; returns its coefficients in
/// the order of the orbits (by least point).
inline std::vector<QLaurent> qe_free_quotient(const QEllElt& e) {
  const auto& s = *e.structure;
  for (std::size_t c = 1; c < s.num_classes(); ++c)
    require(s.entry(c).fixed.empty(), ErrorKind::precondition, "action not free");
  std::vector<QLaurent> out;
  for (std::size_t o = 0; o < s.num_orbits(0); ++o) {
    require(s.ctx(0, o)->rank() == 1, ErrorKind::internal, "free orbit with nontrivial stabilizer");
    out.push_back(e.at(0, o).coeffs[0]);
  }
  return out;
}

/// Outcome of one named check.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// For Z/N acting on a point: in the component at gen^m the basis element
/// x_m = (chi_1, m/N), chi_1(gen) = exp(2 pi i / N), has x_m^N = q^m, and
/// x_m^j for j < N runs through the whole basis up to integral q-shifts.
inline std::vector<CheckResult> verify_tate_presentation(int n) {
  require(n >= 1, ErrorKind::precondition, "N must be positive");
  auto g = cyclic_group(n);
  auto session = Session::for_groups({g});
  auto s = qe_structure(session, FiniteGSet::point(g));
  const auto& ctx = session->scalars();
  const Permutation gen = n == 1 ? g->element(0) : g->generators()[0];
  const auto target_value = ctx.root(ctx.exponent() / n);
  std::vector<CheckResult> out;
  for (int m = 0; m < n; ++m) {
    CheckResult r{"N=" + std::to_string(n) + " m=" + std::to_string(m), true, ""};
    auto fail_with = [&](const std::string& why) {
      if (r.passed) r.detail = why;
      r.passed = false;
    };
    const std::size_t cls = static_cast<std::size_t>(g->class_of(gen.pow(m)));
    const auto& lc = s->ctx(cls, 0);
    if (lc->rank() != static_cast<std::size_t>(n)) fail_with("rank " + std::to_string(lc->rank()));
    const int gen_cls = g->class_of(gen);
    int x_index = -1;
    for (std::size_t i = 0; i < lc->rank(); ++i)
      if (lc->table().row(i).values[gen_cls] == target_value) x_index = static_cast<int>(i);
    if (x_index < 0) {
      fail_with("no character with chi(gen) = exp(2 pi i/N)");
      out.push_back(r);
      continue;
    }
    if (lc->angle(x_index) != Rational(m, n)) fail_with("angle of x_m is " + to_string(lc->angle(x_index)));
    const LambdaElt x = lr_basis(lc, static_cast<std::size_t>(x_index));
    LambdaElt power = lr_unit(lc);
    std::set<std::size_t> seen;
    for (int j = 0; j < n; ++j) {
      std::size_t nonzero = 0, where = 0;
      for (std::size_t i = 0; i < power.coeffs.size(); ++i)
        if (!power.coeffs[i].is_zero()) ++nonzero, where = i;
      const auto& f = power.coeffs[where];
      if (nonzero != 1 || f.terms().size() != 1 || f.terms().begin()->second != 1 ||
          f.terms().begin()->first.denominator() != 1)
        fail_with("x_m^" + std::to_string(j) + " is not a basis element up to an integral q-shift");
      else if (!seen.insert(where).second)
        fail_with("x_m^" + std::to_string(j) + " repeats a basis element");
      power = lr_mul(power, x);
    }
    if (power != lr_q(lc, Rational(m))) fail_with("x_m^N = " + to_string(power));
    if (r.passed) r.detail = "x_m^N = q^" + std::to_string(m);
    out.push_back(r);
  }
  return out;
}

inline std::string to_string(const QEllElt& e) {
  std::string out;
  const auto& s = *e.structure;
  for (std::size_t c = 0; c < s.num_classes(); ++c)
    for (std::size_t o = 0; o < s.num_orbits(c); ++o) {
      if (e.comps[c][o].is_zero()) continue;
      if (!out.empty()) out += "; ";
      out += "[" + s.entry(c).g.to_cycle_string() + " @" + std::to_string(s.entry(c).orbits[o].rep) + "] " +
             to_string(e.comps[c][o]);
    }
  return out.empty() ? "0" : out;
}

}  // namespace qell
