#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qell/character.hpp"

using namespace qell;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

ScalarContext ctx_for(std::vector<GroupPtr> gs) { return ScalarContext::for_groups(gs); }

// Number of cosets xH fixed by g: the permutation character of G on G/H.
long long fixed_cosets(const FiniteGroup& g, const FiniteGroup& h, const Permutation& x) {
  long long fixed = 0;
  std::set<std::vector<Permutation>> seen;
  for (const auto& a : g.elements()) {
    std::vector<Permutation> coset;
    for (const auto& y : h.elements()) coset.push_back(a * y);
    std::sort(coset.begin(), coset.end());
    if (!seen.insert(coset).second) continue;
    // x a H == a H iff a^-1 x a in H
    if (h.contains(a.inverse() * x * a)) ++fixed;
  }
  return fixed;
}

}  // namespace

TEST(ScalarContext, PrimeAndRoot) {
  ScalarContext ctx(12, 24);
  EXPECT_EQ((ctx.prime() - 1) % 12, 0u);
  EXPECT_GT(ctx.prime(), 2u * 24 * 24);
  std::set<modp::u64> powers;
  for (int k = 0; k < 12; ++k) powers.insert(ctx.root(k));
  EXPECT_EQ(powers.size(), 12u);
  EXPECT_EQ(ctx.root(12), 1u);
}

TEST(CharacterTable, Degrees) {
  auto s3 = symmetric_group(3), c4 = cyclic_group(4), d4 = dihedral_group(4);
  auto ctx = ctx_for({s3, c4, d4});
  EXPECT_EQ(character_table(s3, ctx)->degrees(), (std::vector<long long>{1, 1, 2}));
  EXPECT_EQ(character_table(c4, ctx)->degrees(), (std::vector<long long>{1, 1, 1, 1}));
  auto t = character_table(d4, ctx);
  // brute force: 5 classes and sum of squares 8 force {1,1,1,1,2}
  EXPECT_EQ(t->size(), d4->num_classes());
  EXPECT_EQ(t->degrees(), (std::vector<long long>{1, 1, 1, 1, 2}));
}

TEST(CharacterTable, TrivialFirstAndSignSecondForS3) {
  auto s3 = symmetric_group(3);
  auto ctx = ctx_for({s3});
  auto t = character_table(s3, ctx);
  EXPECT_EQ(t->row(0), trivial_cf(ctx, s3));
  EXPECT_EQ(ctx.lift(t->row(1).values[1]), -1);  // sign at a transposition
  EXPECT_EQ(ctx.lift(t->row(2).values[1]), 0);
  EXPECT_EQ(ctx.lift(t->row(2).values[2]), -1);
}

TEST(CharacterTable, AbelianFastPathAgreesWithDixon) {
  for (auto g : {cyclic_group(4), cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(4)).group,
                 direct_product(cyclic_group(3), cyclic_group(3)).group}) {
    auto ctx = ctx_for({g});
    auto a = character_table_abelian(g, ctx);
    auto d = character_table_dixon(g, ctx);
    ASSERT_TRUE(a);
    ASSERT_EQ(a->size(), d->size());
    for (std::size_t i = 0; i < a->size(); ++i) EXPECT_EQ(a->row(i), d->row(i)) << g->name();
  }
}

TEST(CharacterTable, Orthogonality) {
  for (auto g : {symmetric_group(4), alternating_group(4), alternating_group(5), dihedral_group(6), symmetric_group(5)}) {
    auto ctx = ctx_for({g});
    auto t = character_table(g, ctx);
    long long sumsq = 0;
    for (auto d : t->degrees()) sumsq += d * d;
    EXPECT_EQ(sumsq, static_cast<long long>(g->order()));
    // column orthogonality: sum_chi chi(g) chi(h^-1) = |C_G(g)| delta
    const auto& cd = g->conjugacy();
    for (std::size_t a = 0; a < t->size(); ++a)
      for (std::size_t b = 0; b < t->size(); ++b) {
        modp::u64 s = 0;
        for (const auto& row : t->rows()) s = ctx.add(s, ctx.mul(row.values[a], row.values[cd.inverse_class[b]]));
        long long expect = a == b ? static_cast<long long>(g->order() / cd.class_sizes[a]) : 0;
        EXPECT_EQ(ctx.lift(s), expect);
      }
  }
}

TEST(CharacterTable, ScalarContextMustCoverGroup) {
  auto ctx = ctx_for({cyclic_group(2)});
  try {
    character_table(cyclic_group(3), ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("rebuild scalar context"), std::string::npos);
  }
}

TEST(InnerProduct, Examples) {
  auto s3 = symmetric_group(3), c3 = cyclic_group(3);
  auto ctx = ctx_for({s3, c3});
  auto t = character_table(s3, ctx);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(inner_product(ctx, t->row(i), t->row(i)), 1);
  ClassFunction reg{c3, {3, 0, 0}};
  EXPECT_EQ(inner_product(ctx, reg, trivial_cf(ctx, c3)), 1);
  const auto& y = t->row(2);
  EXPECT_EQ(inner_product(ctx, tensor_cf(ctx, y, y), y), 1);
  EXPECT_THROW(inner_product(ctx, y, reg), Error);
}

TEST(TensorDecompose, S3Relations) {
  auto s3 = symmetric_group(3);
  auto ctx = ctx_for({s3});
  auto t = character_table(s3, ctx);
  const auto &one = t->row(0), &x = t->row(1), &y = t->row(2);
  EXPECT_EQ(decompose(*t, tensor_cf(ctx, x, y)), (std::vector<long long>{0, 0, 1}));
  EXPECT_EQ(decompose(*t, tensor_cf(ctx, y, y)), (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(tensor_cf(ctx, one, y), y);
  EXPECT_EQ(decompose(*t, tensor_cf(ctx, x, x)), (std::vector<long long>{1, 0, 0}));
  ClassFunction junk{s3, {1, 0, 0}};
  EXPECT_THROW(decompose(*t, junk), Error);  // regular/6 is not integral
}

TEST(Induce, PermutationCharactersMatchBruteForce) {
  auto s3 = symmetric_group(3);
  auto c3 = subgroup(s3, {cyc(3, {{0, 1, 2}})});
  auto c2 = subgroup(s3, {cyc(3, {{0, 1}})});
  auto ctx = ctx_for({s3});
  auto t = character_table(s3, ctx);
  for (const auto& h : {c3, c2}) {
    auto ind = induce_cf(ctx, s3, trivial_cf(ctx, h));
    for (std::size_t c = 0; c < s3->num_classes(); ++c)
      EXPECT_EQ(ctx.lift(ind.values[c]), fixed_cosets(*s3, *h, s3->class_rep(static_cast<int>(c))));
  }
  EXPECT_EQ(decompose(*t, induce_cf(ctx, s3, trivial_cf(ctx, c3))), (std::vector<long long>{1, 1, 0}));
  EXPECT_EQ(decompose(*t, induce_cf(ctx, s3, trivial_cf(ctx, c2))), (std::vector<long long>{1, 0, 1}));
  EXPECT_THROW(induce_cf(ctx, s3, trivial_cf(ctx, cyclic_group(4))), Error);
}

TEST(Restrict, IdentityAndFrobenius) {
  for (auto g : {symmetric_group(3), dihedral_group(4), symmetric_group(4), alternating_group(4)}) {
    auto ctx = ctx_for({g});
    auto tg = character_table(g, ctx);
    auto id = GroupHom::identity(g);
    for (const auto& r : tg->rows()) EXPECT_EQ(restrict_cf(id, r), r);
    for (std::size_t c = 0; c < g->num_classes(); ++c) {
      auto h = centralizer_group(*g, g->class_rep(static_cast<int>(c)));
      auto th = character_table(h, ctx);
      auto inc = GroupHom::inclusion(h, g);
      for (const auto& chi : th->rows())
        for (const auto& psi : tg->rows())
          EXPECT_EQ(inner_product(ctx, induce_cf(ctx, g, chi), psi), inner_product(ctx, chi, restrict_cf(inc, psi)));
    }
  }
}

TEST(CentralAngle, Examples) {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto ctx = ctx_for({c2, c3});
  auto t2 = character_table(c2, ctx);
  EXPECT_EQ(central_angle(*t2, 1, c2->generators()[0]), Rational(1, 2));
  EXPECT_EQ(central_angle(*t2, 0, c2->generators()[0]), Rational(0));
  auto t3 = character_table(c3, ctx);
  std::set<Rational> angles;
  for (std::size_t i = 0; i < 3; ++i) angles.insert(central_angle(*t3, i, c3->generators()[0]));
  EXPECT_EQ(angles, (std::set<Rational>{Rational(0), Rational(1, 3), Rational(2, 3)}));
}

TEST(CentralAngle, AdditiveOnTensorConstituents) {
  for (auto g : {dihedral_group(4), direct_product(cyclic_group(2), symmetric_group(3)).group, cyclic_group(6)}) {
    auto ctx = ctx_for({g});
    auto t = character_table(g, ctx);
    for (const auto& z : g->elements()) {
      bool central = std::all_of(g->generators().begin(), g->generators().end(),
                                 [&](const Permutation& s) { return s * z == z * s; });
      if (!central) continue;
      for (std::size_t i = 0; i < t->size(); ++i)
        for (std::size_t j = 0; j < t->size(); ++j) {
          auto m = decompose(*t, tensor_cf(ctx, t->row(i), t->row(j)));
          Rational s = frac_of(central_angle(*t, i, z) + central_angle(*t, j, z));
          for (std::size_t l = 0; l < m.size(); ++l)
            if (m[l]) {
              EXPECT_EQ(central_angle(*t, l, z), s);
            }
        }
    }
  }
}

TEST(Adams, Examples) {
  auto s3 = symmetric_group(3);
  auto ctx = ctx_for({s3});
  auto t = character_table(s3, ctx);
  const auto& y = t->row(2);
  EXPECT_EQ(adams_cf(y, 1), y);
  auto p2 = adams_cf(y, 2);
  EXPECT_EQ(ctx.lift(p2.values[0]), 2);
  EXPECT_EQ(ctx.lift(p2.values[1]), 2);
  for (const auto& r : t->rows()) {
    auto p6 = adams_cf(r, 6);
    for (auto v : p6.values) EXPECT_EQ(v, r.values[0]);
  }
}

TEST(Adams, Composition) {
  auto g = symmetric_group(4);
  auto ctx = ctx_for({g});
  auto t = character_table(g, ctx);
  for (const auto& r : t->rows())
    for (int m = 1; m <= 4; ++m)
      for (int k = 1; k <= 4; ++k) EXPECT_EQ(adams_cf(adams_cf(r, k), m), adams_cf(r, m * k));
}
