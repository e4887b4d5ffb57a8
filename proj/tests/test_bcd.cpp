#include <gtest/gtest.h>

#include "itsub/bcd.hpp"
#include "itsub/harness.hpp"
#include "itsub/subtype.hpp"
#include "itsub/syntax.hpp"

using namespace itsub;

namespace {

Ty T(const char* s) { return parse(s); }

}  // namespace

TEST(BcdValidate, Axioms) {
  EXPECT_TRUE(bcd_validate(BcdDerivation::refl(T("c0"))).ok);
  EXPECT_TRUE(bcd_validate(BcdDerivation::u_arrow(T("c0 -> U"))).ok);
  EXPECT_EQ(BcdDerivation::u_arrow(T("c0 -> U")).lhs(), T("U"));
  EXPECT_FALSE(bcd_validate(BcdDerivation::arrow_inter(T("(c0 -> c1) & (c2 -> c3)"), T("c0 -> c1 & c3"))).ok);
  EXPECT_TRUE(bcd_validate(BcdDerivation::arrow_inter(T("(c0 -> c1) & (c0 -> c3)"), T("c0 -> c1 & c3"))).ok);
}

TEST(BcdValidate, TransNeedsMatchingMidpoint) {
  BcdDerivation bad = BcdDerivation::make(BcdRule::Trans, T("c0"), T("c0"), T("c1"),
                                          {BcdDerivation::refl(T("c0")), BcdDerivation::refl(T("c0"))});
  EXPECT_FALSE(bcd_validate(bad).ok);
}

TEST(BcdSearch, Examples) {
  auto swap = bcd_search(T("c0 & c1"), T("c1 & c0"), 4);
  ASSERT_TRUE(swap);
  EXPECT_EQ(swap->rule(), BcdRule::Glb);
  EXPECT_TRUE(bcd_validate(*swap).ok);

  auto dist = bcd_search(T("(c0 -> c1) & (c0 -> c2)"), T("c0 -> c1 & c2"), 2);
  ASSERT_TRUE(dist);
  EXPECT_EQ(dist->rule(), BcdRule::ArrowInter);

  for (std::size_t depth : {1, 4, 8, 12}) EXPECT_FALSE(bcd_search(T("c0"), T("c1"), depth));
}

TEST(BcdSearch, DepthEightIsAtFixpointOnSmallUniverse) {
  const auto u = enumerate_universe({2, 2});
  std::size_t at8 = 0, at12 = 0;
  for (const Ty& a : u)
    for (const Ty& b : u) {
      const bool h8 = bcd_search(a, b, 8).has_value();
      const bool h12 = bcd_search(a, b, 12).has_value();
      at8 += h8;
      at12 += h12;
      ASSERT_TRUE(!h12 || h8) << print(a) << " <= " << print(b);
    }
  EXPECT_EQ(at8, at12);
}

TEST(LemmaFun, Reflexive) {
  Derivation r = lemma_fun(*check_sub(T("c0"), T("c0")), *check_sub(T("c1"), T("c1")));
  EXPECT_EQ(r.lhs(), T("c0 -> c1"));
  EXPECT_EQ(r.rhs(), T("c0 -> c1"));
  EXPECT_TRUE(validate(r).ok);
}

TEST(LemmaFun, TopCodomain) {
  Derivation r = lemma_fun(*check_sub(T("c0"), T("c0")), *check_sub(T("c1"), T("U")));
  EXPECT_EQ(r.rule(), Rule::UArrow);
  EXPECT_TRUE(validate(r).ok);
}

TEST(LemmaFun, CrossCheckedWithCheckSub) {
  Derivation r = lemma_fun(*check_sub(T("c0 & c2"), T("c0")), *check_sub(T("c1 & c3"), T("c1")));
  EXPECT_EQ(r.lhs(), T("c0 -> c1 & c3"));
  EXPECT_EQ(r.rhs(), T("c0 & c2 -> c1"));
  EXPECT_TRUE(validate(r).ok);
  EXPECT_TRUE(check_sub(r.lhs(), r.rhs()));
}

TEST(LemmaFun, RejectsInvalidInput) {
  Derivation bad = Derivation::make(Rule::ReflAtom, T("c0"), T("c1"), std::nullopt, {});
  EXPECT_THROW(lemma_fun(bad, *check_sub(T("c1"), T("c1"))), std::invalid_argument);
}

TEST(LemmaDist, Cases) {
  Derivation both = lemma_dist(T("c0"), T("c1"), T("c2"));
  ASSERT_EQ(both.rule(), Rule::ArrowPrime);
  EXPECT_EQ(*both.witness(), T("(c0 -> c1) & (c0 -> c2)"));
  EXPECT_TRUE(validate(both).ok);

  Derivation left_top = lemma_dist(T("c0"), T("U"), T("c2"));
  ASSERT_EQ(left_top.rule(), Rule::ArrowPrime);
  EXPECT_EQ(*left_top.witness(), T("c0 -> c2"));
  EXPECT_TRUE(validate(left_top).ok);

  Derivation right_top = lemma_dist(T("c0"), T("c1"), T("U"));
  EXPECT_EQ(*right_top.witness(), T("c0 -> c1"));
  EXPECT_TRUE(validate(right_top).ok);

  Derivation top = lemma_dist(T("c0"), T("U"), T("U"));
  EXPECT_EQ(top.rule(), Rule::UArrow);
  EXPECT_TRUE(validate(top).ok);
}

TEST(LemmaEta, Cases) {
  BcdDerivation arrow = lemma_eta(T("c0 -> c1"));
  EXPECT_EQ(arrow.rule(), BcdRule::Refl);

  const Ty a = T("(c0 -> c1) & (c0 -> c2)");
  BcdDerivation e = lemma_eta(a);
  EXPECT_TRUE(bcd_validate(e).ok);
  EXPECT_EQ(e.lhs(), a);
  EXPECT_EQ(e.rhs(), T("c0 & c0 -> c1 & c2"));

  EXPECT_THROW(lemma_eta(T("c0")), std::invalid_argument);
  EXPECT_THROW(lemma_eta(T("(c0 -> c1) & c2")), std::invalid_argument);
}

TEST(ToBcd, Cases) {
  BcdDerivation refl = to_bcd(*check_sub(T("c0"), T("c0")));
  EXPECT_EQ(refl.rule(), BcdRule::Refl);

  BcdDerivation top = to_bcd(*check_sub(T("c1 & c0"), T("c0 -> U")));
  EXPECT_TRUE(bcd_validate(top).ok);
  ASSERT_EQ(top.rule(), BcdRule::Trans);
  EXPECT_EQ(*top.mid(), T("U"));
  EXPECT_EQ(top.premise(1).rule(), BcdRule::Trans);
  EXPECT_EQ(*top.premise(1).mid(), T("c0 -> U"));

  BcdDerivation dist = to_bcd(*check_sub(T("(c0 -> c1) & (c0 -> c2)"), T("c0 -> c1 & c2")));
  EXPECT_TRUE(bcd_validate(dist).ok);
  EXPECT_EQ(dist.lhs(), T("(c0 -> c1) & (c0 -> c2)"));
  EXPECT_EQ(dist.rhs(), T("c0 -> c1 & c2"));
}

TEST(FromBcd, Cases) {
  const Ty a = T("(c0 -> c1) & c2");
  Derivation refl = from_bcd(BcdDerivation::refl(a));
  EXPECT_EQ(derivation_to_json(refl), derivation_to_json(reflexivity(a)));

  BcdDerivation chain = BcdDerivation::trans(BcdDerivation::incl_left(T("(c0 & c1) & c2")),
                                             BcdDerivation::incl_right(T("c0 & c1")));
  Derivation t = from_bcd(chain);
  EXPECT_EQ(t.lhs(), T("(c0 & c1) & c2"));
  EXPECT_EQ(t.rhs(), T("c1"));
  EXPECT_TRUE(validate(t).ok);
}

TEST(FromBcd, RejectsInvalidInput) {
  BcdDerivation bad = BcdDerivation::make(BcdRule::Refl, T("c0"), T("c1"), std::nullopt, {});
  EXPECT_THROW(from_bcd(bad), std::invalid_argument);
  Derivation worse = Derivation::make(Rule::ReflAtom, T("c0"), T("c1"), std::nullopt, {});
  EXPECT_THROW(to_bcd(worse), std::invalid_argument);
}

TEST(Translation, SmallUniverseBothDirections) {
  const auto u = enumerate_universe({2, 1});
  for (const Ty& a : u)
    for (const Ty& b : u) {
      auto d = check_sub(a, b);
      auto s = bcd_search(a, b, 8);
      if (s) {
        ASSERT_TRUE(d) << print(a) << " <= " << print(b);
        Derivation f = from_bcd(*s);
        ASSERT_TRUE(validate(f).ok);
        ASSERT_EQ(f.lhs(), a);
        ASSERT_EQ(f.rhs(), b);
      }
      if (d) {
        BcdDerivation t = to_bcd(*d);
        ASSERT_TRUE(bcd_validate(t).ok);
        ASSERT_EQ(t.lhs(), a);
        ASSERT_EQ(t.rhs(), b);
      }
    }
}
