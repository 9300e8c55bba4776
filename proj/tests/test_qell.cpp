#include <gtest/gtest.h>

#include <random>

#include "qell/qell.hpp"

using namespace qell;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

std::vector<std::size_t> ranks(const QEllStructure& s) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.num_classes(); ++c) out.push_back(s.rank(c));
  return out;
}

int index_with_angle(const LambdaCtx& c, const Rational& a) {
  for (std::size_t i = 0; i < c.rank(); ++i)
    if (c.angle(i) == a && c.degree(i) == 1) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST(QEllStructure, Points) {
  auto c2 = cyclic_group(2), s3 = symmetric_group(3);
  auto session = Session::for_groups({c2, s3});
  auto z2 = qe_structure(session, FiniteGSet::point(c2));
  EXPECT_EQ(ranks(*z2), (std::vector<std::size_t>{2, 2}));
  const auto& c = z2->ctx(1, 0);
  auto x1 = qe_basis(z2, 1, 0, index_with_angle(*c, Rational(1, 2)));
  auto sq = qe_mul(x1, x1);
  EXPECT_EQ(sq.at(1, 0), lr_q(c, Rational(1)));
  EXPECT_TRUE(sq.at(0, 0).is_zero());

  auto p3 = qe_structure(session, FiniteGSet::point(s3));
  EXPECT_EQ(ranks(*p3), (std::vector<std::size_t>{3, 2, 3}));  // C3 has three irreducibles
  for (std::size_t k = 0; k < p3->num_classes(); ++k) {
    ASSERT_EQ(p3->num_orbits(k), 1u);
    EXPECT_EQ(p3->entry(k).orbits[0].stabilizer->order(), p3->entry(k).centralizer->order());
  }
  // rank identity on points
  std::size_t expect = 0;
  for (std::size_t k = 0; k < s3->num_classes(); ++k)
    expect += centralizer_group(*s3, s3->class_rep(static_cast<int>(k)))->num_classes();
  EXPECT_EQ(p3->total_rank(), expect);

  auto free2 = qe_structure(session, FiniteGSet::regular(c2));
  EXPECT_EQ(ranks(*free2), (std::vector<std::size_t>{1, 0}));
}

TEST(QEllRing, Axioms) {
  auto d4 = dihedral_group(4);
  auto session = Session::for_groups({d4});
  auto s = qe_structure(session, FiniteGSet::natural(d4));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    auto a = qe_random(s, rng), b = qe_random(s, rng), c = qe_random(s, rng);
    EXPECT_EQ(qe_mul(qe_mul(a, b), c), qe_mul(a, qe_mul(b, c)));
    EXPECT_EQ(qe_mul(a, b), qe_mul(b, a));
    EXPECT_EQ(qe_mul(a, qe_unit(s)), a);
    EXPECT_EQ(qe_mul(a, qe_add(b, c)), qe_add(qe_mul(a, b), qe_mul(a, c)));
  }
  auto other = qe_structure(session, FiniteGSet::point(d4));
  EXPECT_THROW(qe_add(qe_unit(s), qe_unit(other)), Error);
}

TEST(QEllPullback, IdentityAndInclusion) {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  std::mt19937_64 rng(2);
  auto nat = qe_structure(session, FiniteGSet::natural(s3));
  auto a = qe_random(nat, rng);
  EXPECT_EQ(qe_pullback_hom(GroupHom::identity(s3), a), a);
  EXPECT_EQ(qe_pullback_map(nat, [](int p) { return p; }, a), a);

  auto pt = qe_structure(session, FiniteGSet::point(s3));
  auto c2 = subgroup(s3, {cyc(3, {{0, 1}})});
  auto inc = GroupHom::inclusion(c2, s3);
  EXPECT_EQ(qe_pullback_hom(inc, qe_unit(pt)), qe_unit(qe_structure(session, FiniteGSet::point(c2))));
  auto e_ctx = pt->ctx(0, 0);
  auto r = qe_pullback_hom(inc, qe_basis(pt, 0, 0, 2));  // standard rep Y
  ASSERT_EQ(r.structure->rank(0), 2u);
  EXPECT_EQ(r.at(0, 0).coeffs, (std::vector<QLaurent>{1, 1}));  // Y restricted to C2 is 1 + sign
}

TEST(QEllPullback, CollapseGivesAlgebraStructure) {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto pt = qe_structure(session, FiniteGSet::point(s3));
  auto x = qe_structure(session, FiniteGSet::natural(s3));
  auto collapse = [](int) { return 0; };
  EXPECT_EQ(qe_pullback_map(x, collapse, qe_unit(pt)), qe_unit(x));
  auto qx = qe_pullback_map(x, collapse, qe_q(pt, Rational(1)));
  EXPECT_EQ(qx, qe_q(x, Rational(1)));
  std::mt19937_64 rng(3);
  auto a = qe_random(x, rng);
  EXPECT_EQ(qe_mul(qx, a), qe_scale(QLaurent::q_power(Rational(1)), a));
  EXPECT_EQ(qe_mul(qe_mul(qx, qe_q(x, Rational(-1))), a), a);
}

TEST(QEllPullback, RingHomAndContravariance) {
  auto s4 = symmetric_group(4);
  auto session = Session::for_groups({s4});
  auto d4 = subgroup(s4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  auto v4 = subgroup(d4, {cyc(4, {{0, 2}}), cyc(4, {{1, 3}})});
  auto x = qe_structure(session, FiniteGSet::natural(s4));
  std::mt19937_64 rng(4);
  auto i1 = GroupHom::inclusion(d4, s4), i2 = GroupHom::inclusion(v4, d4);
  for (int k = 0; k < 3; ++k) {
    auto a = qe_random(x, rng), b = qe_random(x, rng);
    EXPECT_EQ(qe_pullback_hom(i1, qe_mul(a, b)), qe_mul(qe_pullback_hom(i1, a), qe_pullback_hom(i1, b)));
    EXPECT_EQ(qe_pullback_hom(i1.after(i2), a), qe_pullback_hom(i2, qe_pullback_hom(i1, a)));
  }
}

TEST(QEllPullback, RejectsNonEquivariantMap) {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto x = qe_structure(session, FiniteGSet::natural(s3));
  EXPECT_THROW(qe_pullback_map(x, [](int p) { return p == 0 ? 1 : p; }, qe_unit(x)), Error);
}

TEST(QEllKunneth, Examples) {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3), s3 = symmetric_group(3);
  auto c2c2 = direct_product(c2, c2).group;
  auto session = Session::for_groups({c2, c3, s3, c2c2, direct_product(c2, c3).group, direct_product(s3, c2).group});
  Kunneth k(session, c2, FiniteGSet::point(c2), c2, FiniteGSet::point(c2));
  EXPECT_EQ(k(qe_unit(k.left()), qe_unit(k.right())), qe_unit(k.product()));
  const auto& lc = k.left()->ctx(1, 0);
  auto x1l = qe_basis(k.left(), 1, 0, index_with_angle(*lc, Rational(1, 2)));
  auto x1r = qe_basis(k.right(), 1, 0, index_with_angle(*lc, Rational(1, 2)));
  auto img = k(x1l, x1r);
  const auto& dp = k.product_group();
  const int cls = dp.group->class_of(dp.pair(c2->generators()[0], c2->generators()[0]));
  int nonzero = 0;
  for (std::size_t i = 0; i < img.at(cls, 0).coeffs.size(); ++i) {
    const auto& f = img.at(cls, 0).coeffs[i];
    if (f.is_zero()) continue;
    ++nonzero;
    EXPECT_EQ(f, QLaurent::q_power(Rational(1)));
    EXPECT_EQ(img.at(cls, 0).ctx->angle(i), Rational(0));
    EXPECT_EQ(img.at(cls, 0).ctx->degree(i), 1);
  }
  EXPECT_EQ(nonzero, 1);
  // q (x) 1 and 1 (x) q both go to q
  EXPECT_EQ(k(qe_q(k.left(), Rational(1)), qe_unit(k.right())), qe_q(k.product(), Rational(1)));
  EXPECT_EQ(k(qe_unit(k.left()), qe_q(k.right(), Rational(1))), qe_q(k.product(), Rational(1)));

  for (auto [g, h] : {std::pair{c2, c3}, std::pair{c2, c2}, std::pair{s3, c2}}) {
    Kunneth kk(session, g, FiniteGSet::point(g), h, FiniteGSet::point(h));
    auto map = kunneth_basis_map(kk);
    EXPECT_EQ(map.size(), kk.product()->total_rank());
    EXPECT_EQ(kk.left()->total_rank() * kk.right()->total_rank(), kk.product()->total_rank());
  }
}

TEST(QEllKunneth, RingHomOnSets) {
  auto s3 = symmetric_group(3), c2 = cyclic_group(2);
  auto session = Session::for_groups({s3, c2, direct_product(s3, c2).group});
  Kunneth k(session, s3, FiniteGSet::natural(s3), c2, FiniteGSet::regular(c2));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3; ++i) {
    auto a = qe_random(k.left(), rng), a2 = qe_random(k.left(), rng);
    auto b = qe_random(k.right(), rng), b2 = qe_random(k.right(), rng);
    EXPECT_EQ(qe_mul(k(a, b), k(a2, b2)), k(qe_mul(a, a2), qe_mul(b, b2)));
    EXPECT_EQ(k(qe_add(a, a2), b), qe_add(k(a, b), k(a2, b)));
  }
}

TEST(ChangeOfGroupTest, RanksAndRoundTrips) {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto c2 = subgroup(s3, {cyc(3, {{0, 1}})});
  auto c3 = subgroup(s3, {cyc(3, {{0, 1, 2}})});
  ChangeOfGroup a(session, s3, c2, FiniteGSet::point(c2));
  EXPECT_EQ(ranks(*a.over_g()), (std::vector<std::size_t>{2, 2, 0}));
  EXPECT_EQ(ranks(*a.over_h()), (std::vector<std::size_t>{2, 2}));
  ChangeOfGroup b(session, s3, c3, FiniteGSet::regular(c3));
  EXPECT_EQ(a.over_g()->total_rank(), 4u);
  EXPECT_EQ(b.over_g()->total_rank(), 1u);
  EXPECT_EQ(b.over_h()->total_rank(), 1u);

  ChangeOfGroup same(session, s3, s3, FiniteGSet::natural(s3));
  std::mt19937_64 rng(6);
  for (auto* cg : {&a, &b, &same}) {
    for (int i = 0; i < 5; ++i) {
      auto x = qe_random(cg->over_h(), rng);
      EXPECT_EQ(cg->forward(cg->inverse(x)), x);
      auto y = qe_random(cg->over_g(), rng);
      EXPECT_EQ(cg->inverse(cg->forward(y)), y);
    }
  }
}

TEST(Transfer, WorkedValues) {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto pt = qe_structure(session, FiniteGSet::point(s3));
  auto c3 = subgroup(s3, {cyc(3, {{0, 1, 2}})});
  auto c2 = subgroup(s3, {cyc(3, {{0, 1}})});
  // classes of S3: e, (12), (123); irreducibles at e: 1, X, Y
  auto e_ctx = pt->ctx(0, 0);
  for (int alg = 0; alg < 2; ++alg) {
    auto tr = [&](const GroupPtr& h) {
      auto u = qe_unit(qe_structure(session, FiniteGSet::point(h)));
      return alg == 0 ? qe_transfer_a(pt, h, u) : qe_transfer_b(pt, u);
    };
    auto t3 = tr(c3);
    EXPECT_EQ(t3.at(0, 0), lr_add(lr_unit(e_ctx), lr_basis(e_ctx, 1)));
    EXPECT_TRUE(t3.at(1, 0).is_zero());
    EXPECT_EQ(t3.at(2, 0), lr_scale(2, lr_unit(pt->ctx(2, 0))));
    auto t2 = tr(c2);
    EXPECT_EQ(t2.at(0, 0), lr_add(lr_unit(e_ctx), lr_basis(e_ctx, 2)));
    EXPECT_EQ(t2.at(1, 0), lr_unit(pt->ctx(1, 0)));
    EXPECT_TRUE(t2.at(2, 0).is_zero());
    std::mt19937_64 rng(7);
    auto a = qe_random(pt, rng);
    EXPECT_EQ(alg == 0 ? qe_transfer_a(pt, s3, a) : qe_transfer_b(pt, a), a);
  }
  auto nat = qe_structure(session, FiniteGSet::natural(s3));
  EXPECT_THROW(qe_transfer_b(nat, qe_unit(qe_structure(session, FiniteGSet::point(c3)))), Error);
}

TEST(Transfer, AlgorithmsAgree) {
  auto d4 = dihedral_group(4);
  auto session = Session::for_groups({d4});
  auto pt = qe_structure(session, FiniteGSet::point(d4));
  std::mt19937_64 rng(8);
  for (const auto& h : two_generated_subgroups(d4)) {
    auto hs = qe_structure(session, FiniteGSet::point(h));
    for (int i = 0; i < 3; ++i) {
      auto b = qe_random(hs, rng);
      EXPECT_EQ(qe_transfer_a(pt, h, b), qe_transfer_b(pt, b)) << h->order();
    }
  }
}

TEST(Transfer, GeneralSetIsAdditiveAndTotal) {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto c2 = subgroup(s3, {cyc(3, {{0, 1}})});
  auto nat = qe_structure(session, FiniteGSet::natural(s3));
  auto xh = qe_structure(session, FiniteGSet::restrict_along(GroupHom::inclusion(c2, s3), FiniteGSet::natural(s3)));
  std::mt19937_64 rng(9);
  auto a = qe_random(xh, rng), b = qe_random(xh, rng);
  EXPECT_EQ(qe_transfer_a(nat, c2, qe_add(a, b)), qe_add(qe_transfer_a(nat, c2, a), qe_transfer_a(nat, c2, b)));
  // projection formula: tr(res(x) * y) = x * tr(y)
  auto x = qe_random(nat, rng);
  auto rx = qe_pullback_hom(GroupHom::inclusion(c2, s3), x);
  EXPECT_EQ(qe_transfer_a(nat, c2, qe_mul(rx, a)), qe_mul(x, qe_transfer_a(nat, c2, a)));
}

TEST(Mu, ExamplesAndProperties) {
  auto c2 = cyclic_group(2), c1 = cyclic_group(1), s3 = symmetric_group(3);
  auto session = Session::for_groups({c2, c1, s3});
  auto z2 = qe_structure(session, FiniteGSet::point(c2));
  std::mt19937_64 rng(10);
  auto a = qe_random(z2, rng);
  EXPECT_EQ(qe_mu(1, a), a);

  auto in = qe_basis(z2, 0, 0, 1);  // (sgn, 0) at e
  auto m = qe_mu(2, in);
  const auto& c = z2->ctx(1, 0);
  EXPECT_EQ(m.at(1, 0), lr_basis(c, index_with_angle(*c, Rational(1, 2)), QLaurent::q_power(Rational(-1, 2))));
  EXPECT_EQ(qe_mul(m, m), qe_mu(2, qe_mul(in, in)));

  auto triv = qe_structure(session, FiniteGSet::point(c1));
  auto f = QLaurent::q_power(Rational(3)) - 2;
  EXPECT_EQ(qe_mu(3, qe_basis(triv, 0, 0, 0, f)), qe_basis(triv, 0, 0, 0, f.rescaled(Rational(1, 3))));

  auto nat = qe_structure(session, FiniteGSet::natural(s3));
  for (int n = 1; n <= 3; ++n) {
    auto x = qe_random(nat, rng), y = qe_random(nat, rng);
    EXPECT_EQ(qe_mu(n, qe_mul(x, y)), qe_mul(qe_mu(n, x), qe_mu(n, y)));
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(qe_mu(n, qe_exterior(x, k)), qe_exterior(qe_mu(n, x), k));
    for (const auto& row : qe_mu(n, x).comps)
      for (const auto& e : row)
        for (const auto& coeff : e.coeffs) EXPECT_TRUE(coeff.exponents_divide(n * s3->exponent()));
  }
}

TEST(FreeAndTrivial, FreeQuotient) {
  auto c2 = cyclic_group(2), s3 = symmetric_group(3);
  auto session = Session::for_groups({c2, s3});
  auto r2 = qe_structure(session, FiniteGSet::regular(c2));
  EXPECT_EQ(qe_free_quotient(qe_unit(r2)), (std::vector<QLaurent>{1}));
  auto r3 = qe_structure(session, FiniteGSet::regular(s3));
  EXPECT_EQ(r3->total_rank(), 1u);
  auto f = QLaurent::q_power(Rational(2)) + 5;
  EXPECT_EQ(qe_free_quotient(qe_scale(f, qe_unit(r3))), (std::vector<QLaurent>{f}));
  auto two = qe_structure(session, FiniteGSet::trivial(c2, 2));
  EXPECT_THROW(qe_free_quotient(qe_unit(two)), Error);
}

TEST(FreeAndTrivial, TrivialSplit) {
  auto c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto session = Session::for_groups({c1, c2, c3, direct_product(c2, c3).group, direct_product(c1, c2).group});
  std::mt19937_64 rng(11);
  for (auto [g, h, x] : {std::tuple{c2, c3, FiniteGSet::regular(c2)}, std::tuple{c2, c3, FiniteGSet::point(c2)},
                         std::tuple{c1, c2, FiniteGSet::point(c1)}}) {
    Kunneth k(session, g, x, h, FiniteGSet::point(h));
    for (int i = 0; i < 5; ++i) {
      auto e = qe_random(k.product(), rng);
      EXPECT_EQ(qe_split_recombine(k, qe_trivial_split(k, e)), e);
    }
  }
  Kunneth k(session, c1, FiniteGSet::point(c1), c2, FiniteGSet::point(c2));
  auto u = qe_unit(k.product());
  auto split = qe_trivial_split(k, u);
  ASSERT_EQ(split.size(), 2u);  // one term per class of the Z/2 factor
  EXPECT_EQ(qe_split_recombine(k, split), u);
}

TEST(Tate, Presentations) {
  for (int n = 1; n <= 8; ++n) {
    auto report = verify_tate_presentation(n);
    ASSERT_EQ(report.size(), static_cast<std::size_t>(n));
    for (const auto& r : report) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
}
