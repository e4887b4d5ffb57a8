#include <gtest/gtest.h>

#include "itsub/bcd.hpp"
#include "itsub/harness.hpp"
#include "itsub/subtype.hpp"
#include "itsub/syntax.hpp"

using namespace itsub;

namespace {

Ty T(const char* s) { return parse(s); }

// The maximal-witness strategy spelled out by hand: keep every arrow part
// whose domain is above c and whose codomain is not top.
std::optional<Ty> oracle_strategy_witness(const Ty& a, const Ty& c) {
  std::optional<Ty> w;
  for (const Ty& p : parts(a)) {
    if (!p.is_arrow() || is_top(p.right()) || !is_subtype(c, p.left())) continue;
    w = w ? Ty::inter(*w, p) : p;
  }
  return w;
}

}  // namespace

TEST(CheckSub, Examples) {
  auto refl = check_sub(T("c0"), T("c0"));
  ASSERT_TRUE(refl);
  EXPECT_EQ(refl->rule(), Rule::ReflAtom);

  EXPECT_TRUE(check_sub(T("(c0 -> c1) & (c0 -> c2)"), T("c0 -> c1 & c2")));

  auto u = check_sub(T("U"), T("c0 -> U"));
  ASSERT_TRUE(u);
  EXPECT_EQ(u->rule(), Rule::UArrow);

  EXPECT_FALSE(check_sub(T("c0"), T("c1")));
}

TEST(CheckSub, CodomainNarrowingAgreesWithClassicSearch) {
  const Ty narrow = T("c0 -> c1 & c2");
  const Ty wide = T("c0 -> c1");
  ASSERT_TRUE(bcd_search(narrow, wide, 8));
  ASSERT_FALSE(bcd_search(wide, narrow, 8));
  EXPECT_TRUE(check_sub(narrow, wide));
  EXPECT_FALSE(check_sub(wide, narrow));
}

TEST(CheckSub, AtomChainPicksLeftmostOccurrence) {
  auto d = check_sub(T("(c1 & c0) & c0"), T("c0"));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->rule(), Rule::LbL);
  EXPECT_EQ(d->premise(0).rule(), Rule::LbR);
}

TEST(FindFactor, MaximalWitness) {
  auto f = find_factor(T("(c0 -> c1) & (c0 -> c2)"), T("c0"), T("c1 & c2"));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->witness, oracle_strategy_witness(T("(c0 -> c1) & (c0 -> c2)"), T("c0")));
  EXPECT_EQ(f->witness, T("(c0 -> c1) & (c0 -> c2)"));
  EXPECT_TRUE(validate_factoring(*f).ok);
}

TEST(FindFactor, SkipsTopCodomainParts) {
  auto f = find_factor(T("(c0 -> c1) & (c0 -> U)"), T("c0"), T("c1"));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->witness, T("c0 -> c1"));
  EXPECT_FALSE(find_factor(T("c0"), T("c1"), T("c2")));
}

TEST(FindFactor, RejectsTopCodomain) {
  EXPECT_THROW(find_factor(T("c0 -> c1"), T("c0"), T("U")), std::invalid_argument);
}

TEST(FindFactorExhaustive, NeedsBothArrows) {
  const Ty a = T("(c1 -> c2) & (c0 -> c3)");
  const Ty c = T("c0 & c1");
  const Ty d = T("c2 & c3");
  // Classic derivation built by hand: a <= (c -> c2) & (c -> c3) <= c -> d.
  const Ty mid = Ty::inter(Ty::arrow(c, T("c2")), Ty::arrow(c, T("c3")));
  BcdDerivation left = BcdDerivation::trans(
      BcdDerivation::incl_left(a), BcdDerivation::arrow(BcdDerivation::incl_right(c), BcdDerivation::refl(T("c2"))));
  BcdDerivation right = BcdDerivation::trans(
      BcdDerivation::incl_right(a), BcdDerivation::arrow(BcdDerivation::incl_left(c), BcdDerivation::refl(T("c3"))));
  BcdDerivation oracle = BcdDerivation::trans(BcdDerivation::glb(mid, left, right),
                                              BcdDerivation::arrow_inter(mid, Ty::arrow(c, d)));
  ASSERT_TRUE(bcd_validate(oracle).ok);
  ASSERT_EQ(oracle.rhs(), Ty::arrow(c, d));

  auto g = find_factor_exhaustive(a, c, d);
  ASSERT_TRUE(g);
  EXPECT_TRUE(contained_in(a, g->witness));
  EXPECT_TRUE(validate_factoring(*g).ok);
  auto f = find_factor(a, c, d);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->witness, g->witness);
}

TEST(FindFactorExhaustive, AbsentWhenOnlyTopCodomain) {
  EXPECT_FALSE(find_factor_exhaustive(T("c0 -> U"), T("c0"), T("c1")));
  EXPECT_FALSE(find_factor(T("c0 -> U"), T("c0"), T("c1")));
}

TEST(LemmaFactorAll, ArrowPassesThrough) {
  const Ty a = T("c0 -> c1");
  const Ty b = T("(c0 -> c1) & c2");
  auto f = find_factor(b, T("c0"), T("c1"));
  ASSERT_TRUE(f);
  FactoringMap per_part{{a, *f}};
  Factoring m = lemma_factor_all(a, b, per_part);
  EXPECT_EQ(m.witness, f->witness);
  EXPECT_TRUE(validate_factoring(m).ok);
}

TEST(LemmaFactorAll, MergesWitnesses) {
  const Ty a = T("(c0 -> c1) & (c0 -> c2)");
  FactoringMap per_part;
  for (const Ty& p : parts(a)) {
    auto f = find_factor(a, p.left(), p.right());
    ASSERT_TRUE(f);
    per_part.emplace(p, *f);
  }
  Factoring m = lemma_factor_all(a, a, per_part);
  EXPECT_EQ(m.lhs, T("c0 & c0"));
  EXPECT_EQ(m.rhs, T("c1 & c2"));
  EXPECT_EQ(m.against, a);
  EXPECT_TRUE(validate_factoring(m).ok);
  EXPECT_TRUE(validate(to_arrow_prime(m)).ok);
}

TEST(LemmaFactorAll, RejectsTopInCod) {
  EXPECT_THROW(lemma_factor_all(T("c0 -> U"), T("c0 -> U"), {}), std::invalid_argument);
}

TEST(TransCompose, ReflCase) {
  auto d1 = check_sub(T("c0 & c1"), T("c0"));
  auto d2 = check_sub(T("c0"), T("c0"));
  Derivation r = trans_compose(*d1, *d2);
  EXPECT_EQ(r.lhs(), T("c0 & c1"));
  EXPECT_EQ(r.rhs(), T("c0"));
  EXPECT_TRUE(validate(r).ok);
}

TEST(TransCompose, ArrowCase) {
  const Ty a = T("c0 -> c1 & c2");
  const Ty b = T("c0 -> c1");
  const Ty c = T("c0 & c3 -> c1");
  ASSERT_TRUE(bcd_search(a, c, 8));
  Derivation r = trans_compose(*check_sub(a, b), *check_sub(b, c), ComposeOptions{true, nullptr});
  EXPECT_EQ(r.lhs(), a);
  EXPECT_EQ(r.rhs(), c);
  EXPECT_TRUE(validate(r).ok);
}

TEST(TransCompose, TopCase) {
  const Ty mid = T("c0 & U");
  std::size_t composed = 0;
  for (const Ty& a : enumerate_universe({1, 1})) {
    auto d1 = check_sub(a, mid);
    if (!d1) continue;
    Derivation r = trans_compose(*d1, *check_sub(mid, T("U")));
    EXPECT_EQ(r.rule(), Rule::UTop);
    ++composed;
  }
  EXPECT_GT(composed, 0u);
}

TEST(TransCompose, RejectsMismatchedMiddle) {
  EXPECT_THROW(trans_compose(*check_sub(T("c0"), T("c0")), *check_sub(T("c1"), T("c1"))), std::invalid_argument);
}

TEST(TransCompose, MeasureCheckedOnEveryRecursiveCall) {
  const auto u = enumerate_universe({2, 1});
  for (const Ty& a : u)
    for (const Ty& b : u)
      for (const Ty& c : u) {
        auto d1 = check_sub(a, b);
        auto d2 = check_sub(b, c);
        if (!d1 || !d2) continue;
        ComposeStats stats;
        Derivation r = trans_compose(*d1, *d2, ComposeOptions{true, &stats});
        ASSERT_TRUE(validate(r).ok);
        ASSERT_EQ(stats.measure_checks + 1, stats.calls);
      }
}

// Property checks on the size <= 2 universe; the acceptance run repeats
// them on size <= 3.

class Universe2 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { u = new std::vector<Ty>(enumerate_universe({2, 2})); }
  static void TearDownTestSuite() { delete u; }
  static std::vector<Ty>* u;
};
std::vector<Ty>* Universe2::u = nullptr;

TEST_F(Universe2, Soundness) {
  for (const Ty& a : *u)
    for (const Ty& b : *u)
      if (auto d = check_sub(a, b)) {
        ASSERT_TRUE(validate(*d).ok) << print(a) << " <: " << print(b);
        ASSERT_EQ(d->lhs(), a);
        ASSERT_EQ(d->rhs(), b);
      }
}

TEST_F(Universe2, Reflexivity) {
  for (const Ty& a : *u) {
    ASSERT_TRUE(check_sub(a, a));
    Derivation d = reflexivity(a);
    ASSERT_TRUE(validate(d).ok);
    if (a.is_arrow()) EXPECT_EQ(d.rule(), is_top(a.right()) ? Rule::UArrow : Rule::ArrowPrime);
  }
}

TEST_F(Universe2, IntersectionInversionAndMonotonicity) {
  for (const Ty& a : *u)
    for (const Ty& b : *u) {
      const bool sub = is_subtype(a, b);
      if (b.is_inter()) ASSERT_EQ(sub, is_subtype(a, b.left()) && is_subtype(a, b.right()));
      if (!sub) continue;
      for (const Ty& c : *u)
        if (contained_in(c, b)) ASSERT_TRUE(is_subtype(a, c)) << print(a) << " " << print(b) << " " << print(c);
    }
}

TEST_F(Universe2, TopProperties) {
  for (const Ty& a : *u) {
    if (!is_top(a)) continue;
    for (const Ty& b : *u) {
      if (is_subtype(a, b)) ASSERT_TRUE(is_top(b));
      ASSERT_TRUE(validate(top_below(b, a)).ok);
    }
  }
}

TEST_F(Universe2, InversionPrinciple) {
  for (const Ty& a : *u)
    for (const Ty& b : *u) {
      auto d = check_sub(a, b);
      if (!d) continue;
      for (const Ty& p : parts(b)) {
        if (!p.is_arrow() || is_top(p.right())) continue;
        ASSERT_TRUE(find_factor_exhaustive(a, p.left(), p.right()));
        Factoring f = invert_arrow(*d, p);
        ASSERT_TRUE(validate_factoring(f).ok);
      }
    }
}

TEST_F(Universe2, StrategyMatchesExhaustive) {
  for (const Ty& a : *u)
    for (const Ty& b : *u) {
      if (!b.is_arrow() || is_top(b.right())) continue;
      ASSERT_EQ(find_factor(a, b.left(), b.right()).has_value(),
                find_factor_exhaustive(a, b.left(), b.right()).has_value());
    }
}
