#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qell/character.hpp"
#include "qell/qlaurent.hpp"

namespace qell {

// Representation ring of Lambda_K(g) = K x R / <(g, -1)> for a finite group
// K with g central. Every irreducible is rho (.) e^{2 pi i c t} where rho is
// irreducible on K and rho(g) = e^{2 pi i c}; fixing c in [0,1) gives the
// canonical Z[q^+-]-basis {(rho, c_rho)}, and the general irreducible is
// q^m (rho, c_rho) since q(t) = e^{2 pi i t}.
//
// Structure constants follow from that description:
//  * (rho,c)(rho',c') = (rho x rho') (.) e^{2 pi i (c+c') t}. Each constituent
//    mu of rho x rho' has mu(g) = e^{2 pi i (c+c')}, so its angle is
//    frac(c+c') and the leftover rotation is q^floor(c+c'), floor in {0,1}.
//  * psi^m(rho,c) has character chi(h^m) e^{2 pi i m c t}; constituents of
//    psi^m chi_rho all take the value e^{2 pi i m c} at g, giving
//    q^floor(mc) (lambda, frac(mc)); on coefficients q -> q^m.
//  * Restriction along a homomorphism that maps g to g' keeps t fixed, so
//    the angle of every constituent equals the source angle.

class LambdaCtx {
 public:
  struct Term {
    int index;
    long long mult;
    int shift;  // power of q
  };

  LambdaCtx(GroupPtr group, Permutation g, TablePtr table)
      : group_(std::move(group)), g_(std::move(g)), table_(std::move(table)) {
    require(group_->contains(g_), ErrorKind::precondition, "element not in group " + group_->name());
    for (const auto& s : group_->generators())
      require(s * g_ == g_ * s, ErrorKind::precondition, "element is not central in " + group_->name());
    order_ = g_.order();
    for (std::size_t i = 0; i < table_->size(); ++i) {
      angles_.push_back(central_angle(*table_, i, g_));
      require(order_ % angles_.back().denominator() == 0, ErrorKind::internal, "angle denominator does not divide ord(g)");
    }
    require(angles_.empty() || angles_[0] == Rational(0), ErrorKind::internal, "trivial character has nonzero angle");
  }

  const GroupPtr& group() const noexcept { return group_; }
  const Permutation& element() const noexcept { return g_; }
  long long element_order() const noexcept { return order_; }
  const CharacterTable& table() const noexcept { return *table_; }
  const ScalarContext& scalars() const noexcept { return table_->scalars(); }
  std::size_t rank() const noexcept { return angles_.size(); }
  const Rational& angle(std::size_t i) const { return angles_[i]; }
  long long degree(std::size_t i) const { return table_->degrees()[i]; }

  bool same_as(const LambdaCtx& o) const { return this == &o || (g_ == o.g_ && group_->same_elements(*o.group_)); }

  const std::vector<Term>& product(std::size_t i, std::size_t j) const {
    std::call_once(products_once_, [this] { build_products(); });
    return products_[i * rank() + j];
  }

 private:
  void build_products() const {
    const std::size_t r = rank();
    products_.assign(r * r, {});
    const auto& ctx = scalars();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        Rational s = angles_[i] + angles_[j];
        int shift = static_cast<int>(floor_of(s));
        Rational target = frac_of(s);
        auto mult = decompose(*table_, tensor_cf(ctx, table_->row(i), table_->row(j)));
        std::vector<Term> terms;
        for (std::size_t m = 0; m < r; ++m) {
          if (mult[m] == 0) continue;
          require(angles_[m] == target, ErrorKind::internal, "product constituent has the wrong angle");
          terms.push_back({static_cast<int>(m), mult[m], shift});
        }
        products_[i * r + j] = terms;
        products_[j * r + i] = std::move(terms);
      }
  }

  GroupPtr group_;
  Permutation g_;
  TablePtr table_;
  long long order_ = 1;
  std::vector<Rational> angles_;
  mutable std::once_flag products_once_;
  mutable std::vector<std::vector<Term>> products_;
};

using LambdaCtxPtr = std::shared_ptr<const LambdaCtx>;

/// Scalar context plus caches of character tables and Lambda contexts,
/// keyed by element sets. Every group used in one computation must be
/// covered by the scalar context fixed at construction.
class Session {
 public:
  explicit Session(ScalarContext scalars) : scalars_(scalars) {}

  static std::shared_ptr<Session> for_groups(const std::vector<GroupPtr>& groups) {
    return std::make_shared<Session>(ScalarContext::for_groups(groups));
  }

  const ScalarContext& scalars() const noexcept { return scalars_; }

  TablePtr table(const GroupPtr& g) {
    std::lock_guard lock(mu_);
    auto it = tables_.find(g->elements());
    if (it != tables_.end()) return it->second;
    auto t = character_table(g, scalars_);
    tables_.emplace(g->elements(), t);
    return t;
  }

  LambdaCtxPtr lambda_ctx(const GroupPtr& k, const Permutation& g) {
    {
      std::lock_guard lock(mu_);
      auto it = contexts_.find({k->elements(), g});
      if (it != contexts_.end()) return it->second;
    }
    auto ctx = std::make_shared<const LambdaCtx>(k, g, table(k));
    std::lock_guard lock(mu_);
    return contexts_.emplace(std::make_pair(k->elements(), g), ctx).first->second;
  }

  /// The canonical context for RLambda_G(g): K = C_G(g).
  LambdaCtxPtr ctx_build(const GroupPtr& g, const Permutation& x) { return lambda_ctx(centralizer_group(*g, x), x); }

 private:
  ScalarContext scalars_;
  std::mutex mu_;
  std::map<std::vector<Permutation>, TablePtr> tables_;
  std::map<std::pair<std::vector<Permutation>, Permutation>, LambdaCtxPtr> contexts_;
};

using SessionPtr = std::shared_ptr<Session>;

/// Element of RLambda: one Z[q^Q] coefficient per canonical basis element.
struct LambdaElt {
  LambdaCtxPtr ctx;
  std::vector<QLaurent> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const LambdaElt& a, const LambdaElt& b) {
    return a.ctx->same_as(*b.ctx) && a.coeffs == b.coeffs;
  }
};

inline LambdaElt lr_zero(const LambdaCtxPtr& ctx) { return {ctx, std::vector<QLaurent>(ctx->rank())}; }

inline LambdaElt lr_basis(const LambdaCtxPtr& ctx, std::size_t i, QLaurent coeff = 1) {
  LambdaElt e = lr_zero(ctx);
  e.coeffs.at(i) = std::move(coeff);
  return e;
}

inline LambdaElt lr_unit(const LambdaCtxPtr& ctx) { return lr_basis(ctx, 0); }

/// q^r times the unit.
inline LambdaElt lr_q(const LambdaCtxPtr& ctx, const Rational& r) { return lr_basis(ctx, 0, QLaurent::q_power(r)); }

namespace detail {
inline void same_ctx(const LambdaElt& a, const LambdaElt& b) {
  require(a.ctx->same_as(*b.ctx), ErrorKind::precondition, "Lambda context mismatch");
}
}  // namespace detail

inline LambdaElt lr_add(const LambdaElt& a, const LambdaElt& b) {
  detail::same_ctx(a, b);
  LambdaElt r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

inline LambdaElt lr_sub(const LambdaElt& a, const LambdaElt& b) {
  detail::same_ctx(a, b);
  LambdaElt r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

inline LambdaElt lr_scale(const QLaurent& f, const LambdaElt& a) {
  LambdaElt r = a;
  for (auto& c : r.coeffs) c = f * c;
  return r;
}

inline LambdaElt lr_mul(const LambdaElt& a, const LambdaElt& b) {
  detail::same_ctx(a, b);
  LambdaElt r = lr_zero(a.ctx);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      QLaurent ab = a.coeffs[i] * b.coeffs[j];
      for (const auto& t : a.ctx->product(i, j))
        r.coeffs[t.index] += ab.scaled(t.mult).shifted(Rational(t.shift));
    }
  }
  return r;
}

/// Bilinear pairing for which the canonical basis is orthonormal.
inline QLaurent lr_pairing(const LambdaElt& a, const LambdaElt& b) {
  detail::same_ctx(a, b);
  QLaurent s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i] * b.coeffs[i];
  return s;
}

/// sum_i coeff_i * dim(rho_i).
inline QLaurent lr_dimension(const LambdaElt& a) {
  QLaurent s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i].scaled(a.ctx->degree(i));
  return s;
}

/// Restriction along psi: result group -> source group, with
/// psi(result element) == source element.
inline LambdaElt lr_pullback(const LambdaCtxPtr& result, const std::function<Permutation(const Permutation&)>& psi,
                             const LambdaElt& elt) {
  const auto& src = *elt.ctx;
  require(psi(result->element()) == src.element(), ErrorKind::precondition,
          "restriction must send the distinguished element to the distinguished element");
  LambdaElt out = lr_zero(result);
  for (std::size_t i = 0; i < elt.coeffs.size(); ++i) {
    if (elt.coeffs[i].is_zero()) continue;
    auto mult = decompose(result->table(), restrict_cf(result->group(), psi, src.table().row(i)));
    for (std::size_t l = 0; l < mult.size(); ++l) {
      if (mult[l] == 0) continue;
      require(result->angle(l) == src.angle(i), ErrorKind::internal, "restricted constituent has the wrong angle");
      out.coeffs[l] += elt.coeffs[i].scaled(mult[l]);
    }
  }
  return out;
}

/// phi^*: RLambda_H(phi(tau)) -> RLambda_G(tau) for phi: G -> H.
inline LambdaElt lr_restrict_hom(Session& session, const GroupHom& phi, const Permutation& tau, const LambdaElt& elt) {
  auto result = session.ctx_build(phi.domain(), tau);
  require(elt.ctx->same_as(*session.ctx_build(phi.codomain(), phi(tau))), ErrorKind::precondition,
          "element is not over RLambda_H(phi(tau))");
  return lr_pullback(result, [&](const Permutation& p) { return phi(p); }, elt);
}

/// Ind from Lambda_K(g) to Lambda_K'(g) for K <= K':
/// (lambda, c) -> sum_mu <Ind chi_lambda, chi_mu> (mu, c).
inline LambdaElt lr_induce(const LambdaCtxPtr& result, const LambdaElt& elt) {
  const auto& src = *elt.ctx;
  require(src.element() == result->element(), ErrorKind::precondition, "induction needs the same distinguished element");
  require(src.group()->is_subgroup_of(*result->group()), ErrorKind::precondition,
          "induction source is not a subgroup");
  const auto& ctx = result->scalars();
  LambdaElt out = lr_zero(result);
  for (std::size_t i = 0; i < elt.coeffs.size(); ++i) {
    if (elt.coeffs[i].is_zero()) continue;
    auto mult = decompose(result->table(), induce_cf(ctx, result->group(), src.table().row(i)));
    for (std::size_t l = 0; l < mult.size(); ++l) {
      if (mult[l] == 0) continue;
      require(result->angle(l) == src.angle(i), ErrorKind::internal, "induced constituent has the wrong angle");
      out.coeffs[l] += elt.coeffs[i].scaled(mult[l]);
    }
  }
  const long long index = static_cast<long long>(result->group()->order() / src.group()->order());
  require(lr_dimension(out) == lr_dimension(elt).scaled(index), ErrorKind::internal,
          "induction did not multiply the dimension by the index");
  return out;
}

/// Ind^{Lambda_G(g)}_{Lambda_H(g)} for g in H <= G.
inline LambdaElt lr_induce(Session& session, const GroupPtr& g_group, const LambdaElt& elt) {
  return lr_induce(session.ctx_build(g_group, elt.ctx->element()), elt);
}

/// Transport along conjugation by h into an explicit target context, which
/// must be (h K h^-1, h g h^-1).
inline LambdaElt lr_conjugate(const LambdaCtxPtr& result, const LambdaElt& elt, const Permutation& h) {
  const Permutation hinv = h.inverse();
  return lr_pullback(result, [&](const Permutation& x) { return hinv * x * h; }, elt);
}

inline LambdaElt lr_conjugate(Session& session, const LambdaElt& elt, const Permutation& h) {
  const auto& src = *elt.ctx;
  const Permutation hinv = h.inverse();
  std::vector<Permutation> conj;
  for (const auto& x : src.group()->elements()) conj.push_back(h * x * hinv);
  auto k = FiniteGroup::from_closed_set(src.group()->degree(), std::move(conj), src.group()->name() + "^h");
  return lr_conjugate(session.lambda_ctx(k, h * src.element() * hinv), elt, h);
}

/// RLambda_{K'}(g^n) -> RLambda_K(g)[q^{1/n}] for K <= K': restrict to K,
/// then identify Lambda_K(g^n) with the n-fold rotation cover of Lambda_K(g).
/// A constituent lambda of angle d contributes q^{(c - n d)/n} (lambda, d)
/// and coefficients go q -> q^{1/n}.
inline LambdaElt lr_mu_transport(const LambdaCtxPtr& result, const LambdaElt& elt, long long n) {
  require(n >= 1, ErrorKind::precondition, "mu index must be positive");
  const auto& src = *elt.ctx;
  require(result->element().pow(n) == src.element(), ErrorKind::precondition,
          "mu transport needs source element g^n");
  require(result->group()->is_subgroup_of(*src.group()), ErrorKind::precondition,
          "mu transport needs the target group inside the source group");
  const Rational inv_n(1, n);
  LambdaElt out = lr_zero(result);
  for (std::size_t i = 0; i < elt.coeffs.size(); ++i) {
    if (elt.coeffs[i].is_zero()) continue;
    auto mult = decompose(result->table(),
                          restrict_cf(result->group(), [](const Permutation& p) { return p; }, src.table().row(i)));
    QLaurent base = elt.coeffs[i].rescaled(inv_n);
    for (std::size_t l = 0; l < mult.size(); ++l) {
      if (mult[l] == 0) continue;
      Rational gap = src.angle(i) - Rational(n) * result->angle(l);
      require(gap.denominator() == 1, ErrorKind::internal, "mu transport: non-integral angle gap");
      out.coeffs[l] += base.scaled(mult[l]).shifted(gap * inv_n);
    }
  }
  return out;
}

/// RLambda_G(g^n) -> RLambda_G(g)[q^{1/n}].
inline LambdaElt lr_mu_transport(Session& session, const GroupPtr& g_group, const Permutation& g, long long n,
                                 const LambdaElt& elt) {
  return lr_mu_transport(session.ctx_build(g_group, g), elt, n);
}

inline LambdaElt lr_adams(const LambdaElt& elt, long long m) {
  require(m >= 1, ErrorKind::precondition, "Adams index must be positive");
  const auto& ctx = *elt.ctx;
  LambdaElt out = lr_zero(elt.ctx);
  for (std::size_t i = 0; i < elt.coeffs.size(); ++i) {
    if (elt.coeffs[i].is_zero()) continue;
    Rational mc = Rational(m) * ctx.angle(i);
    Rational target = frac_of(mc);
    auto mult = decompose(ctx.table(), adams_cf(ctx.table().row(i), m));
    QLaurent base = elt.coeffs[i].rescaled(Rational(m)).shifted(Rational(floor_of(mc)));
    for (std::size_t l = 0; l < mult.size(); ++l) {
      if (mult[l] == 0) continue;
      require(ctx.angle(l) == target, ErrorKind::internal, "Adams constituent has the wrong angle");
      out.coeffs[l] += base.scaled(mult[l]);
    }
  }
  return out;
}

/// Exterior power via k lambda^k = sum_{i=1..k} (-1)^{i-1} psi^i lambda^{k-i}.
inline LambdaElt lr_exterior(const LambdaElt& x, int k) {
  require(k >= 0, ErrorKind::precondition, "exterior power index must be nonnegative");
  std::vector<LambdaElt> lam{lr_unit(x.ctx)};
  std::vector<LambdaElt> psi{lr_zero(x.ctx)};
  for (int j = 1; j <= k; ++j) {
    psi.push_back(lr_adams(x, j));
    LambdaElt acc = lr_zero(x.ctx);
    for (int i = 1; i <= j; ++i) {
      LambdaElt term = lr_mul(psi[i], lam[j - i]);
      acc = (i % 2 == 1) ? lr_add(acc, term) : lr_sub(acc, term);
    }
    for (auto& c : acc.coeffs) c = c.divided_exactly(j);
    lam.push_back(std::move(acc));
  }
  return lam[k];
}

inline std::string to_string(const LambdaElt& e) {
  std::string out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    if (e.coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + e.coeffs[i].to_string() + ")*e" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qell
