#include <gtest/gtest.h>

#include <tuple>

#include "itsub/harness.hpp"
#include "itsub/syntax.hpp"
#include "itsub/types.hpp"

using namespace itsub;

namespace {

Ty T(const char* s) { return parse(s); }

// Oracles written straight from the inference rules, independent of the
// library's list-based implementation.

// A in+ B: A is a non-intersection reached from B through intersections.
bool oracle_inside(const Ty& a, const Ty& b) {
  if (b.is_inter()) return oracle_inside(a, b.left()) || oracle_inside(a, b.right());
  return !a.is_inter() && a == b;
}

// A subset+ B: every non-intersection leaf of A is inside B.
bool oracle_contained(const Ty& a, const Ty& b) {
  if (a.is_inter()) return oracle_contained(a.left(), b) && oracle_contained(a.right(), b);
  return oracle_inside(a, b);
}

bool oracle_top(const Ty& a) {
  switch (a.kind()) {
    case TyKind::Top: return true;
    case TyKind::Const: return false;
    case TyKind::Arrow: return oracle_top(a.right());
    case TyKind::Inter: return oracle_top(a.left()) && oracle_top(a.right());
  }
  return false;
}

std::size_t oracle_size(const Ty& a) {
  if (a.is_atom()) return 0;
  return 1 + oracle_size(a.left()) + oracle_size(a.right());
}

std::size_t oracle_depth(const Ty& a) {
  if (a.is_atom()) return 0;
  const std::size_t m = std::max(oracle_depth(a.left()), oracle_depth(a.right()));
  return a.is_arrow() ? m + 1 : m;
}

bool oracle_less(const MeasureTriple& x, const MeasureTriple& y) {
  return std::tie(x.depth_mid, x.size_mid, x.size_right) < std::tie(y.depth_mid, y.size_mid, y.size_right);
}

}  // namespace

TEST(Types, StructuralEqualityOnly) {
  EXPECT_EQ(T("c0 & c1"), Ty::inter(Ty::constant(0), Ty::constant(1)));
  EXPECT_NE(T("c0 & c1"), T("c1 & c0"));
  EXPECT_NE(T("(c0 & c1) & c2"), T("c0 & (c1 & c2)"));
  EXPECT_NE(T("c0 & c0"), T("c0"));
  EXPECT_EQ(deep_copy(T("(c0 -> U) & c1")), T("(c0 -> U) & c1"));
  EXPECT_EQ(Ty::constant(1u << 20), Ty::constant(1u << 20));
}

TEST(Types, Parts) {
  EXPECT_EQ(parts(T("c0")), std::vector<Ty>{T("c0")});
  EXPECT_EQ(parts(T("(c0 -> c1) & c2")), (std::vector<Ty>{T("c0 -> c1"), T("c2")}));
  // Duplicates survive, in left-to-right order.
  const Ty a = T("(c0 & c1) & c0");
  const std::vector<Ty> expected{T("c0"), T("c1"), T("c0")};
  ASSERT_EQ(parts(a), expected);
  for (const Ty& p : expected) ASSERT_TRUE(oracle_inside(p, a));
}

TEST(Types, IsPart) {
  EXPECT_TRUE(is_part(T("c0"), T("c0 & c1")));
  const Ty inner = T("c0 & c1");
  const Ty outer = T("(c0 & c1) & c2");
  ASSERT_FALSE(oracle_inside(inner, outer));
  EXPECT_FALSE(is_part(inner, outer));
  EXPECT_TRUE(is_part(T("c0 -> c1"), T("c0 -> c1")));
  EXPECT_FALSE(is_part(T("c1"), T("c0 -> c1")));
}

TEST(Types, ContainedIn) {
  const Ty a = T("c0 & c1");
  const Ty b = T("c1 & (c0 & c2)");
  ASSERT_TRUE(oracle_contained(a, b));
  EXPECT_TRUE(contained_in(a, b));
  EXPECT_FALSE(contained_in(T("c0 & c1"), T("c0")));
  for (const Ty& t : enumerate_universe({2, 2})) EXPECT_TRUE(contained_in(t, t)) << print(t);
}

TEST(Types, ContainedInAgreesWithOracle) {
  const auto u = enumerate_universe({2, 2});
  for (const Ty& a : u)
    for (const Ty& b : u) ASSERT_EQ(contained_in(a, b), oracle_contained(a, b)) << print(a) << " in " << print(b);
}

TEST(Types, DomCod) {
  EXPECT_EQ(dom(T("(c0 -> c1) & (c2 -> c3)")), T("c0 & c2"));
  EXPECT_EQ(cod(T("(c0 -> c1) & (c2 -> c3)")), T("c1 & c3"));
  EXPECT_FALSE(dom(T("c0")).has_value());
  EXPECT_FALSE(cod(T("U")).has_value());
  EXPECT_FALSE(dom(T("(c0 -> c1) & c2")).has_value());
  EXPECT_EQ(dom(T("c0 -> c1")), T("c0"));
}

TEST(Types, Top) {
  EXPECT_TRUE(is_top(T("U")));
  const Ty a = T("c0 -> (U & U)");
  ASSERT_TRUE(oracle_top(a));
  EXPECT_TRUE(is_top(a));
  EXPECT_FALSE(is_top(T("c0")));
  for (const Ty& t : enumerate_universe({2, 2})) ASSERT_EQ(is_top(t), oracle_top(t)) << print(t);
}

TEST(Types, TopInCod) {
  EXPECT_TRUE(top_in_cod(T("c0 -> U")));
  const Ty a = T("(c0 -> c1) & (c0 -> U)");
  ASSERT_TRUE(oracle_top(parts(a)[1].right()));
  EXPECT_TRUE(top_in_cod(a));
  EXPECT_FALSE(top_in_cod(T("c0 & (c0 -> c1)")));
  EXPECT_FALSE(top_in_cod(T("U")));
}

TEST(Types, SizeDepth) {
  for (const char* s : {"c0 -> c1", "(c0 -> c1) & c2", "c0", "U", "((c0 -> c1) -> c2) & (c0 & c1)"}) {
    const Ty a = T(s);
    EXPECT_EQ(size(a), oracle_size(a)) << s;
    EXPECT_EQ(depth(a), oracle_depth(a)) << s;
  }
  EXPECT_EQ(size(T("c0 -> c1")), 1u);
  EXPECT_EQ(depth(T("c0 -> c1")), 1u);
  EXPECT_EQ(size(T("(c0 -> c1) & c2")), 2u);
  EXPECT_EQ(depth(T("(c0 -> c1) & c2")), 1u);
}

TEST(Types, MeasureLess) {
  EXPECT_TRUE(measure_less({0, 1, 5}, {1, 0, 0}));
  ASSERT_TRUE(oracle_less({1, 2, 9}, {1, 3, 0}));
  EXPECT_TRUE(measure_less({1, 2, 9}, {1, 3, 0}));
  EXPECT_FALSE(measure_less({1, 2, 2}, {1, 2, 2}));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d)
          for (std::size_t e = 0; e < 3; ++e)
            for (std::size_t f = 0; f < 3; ++f) {
              const MeasureTriple x{a, b, c}, y{d, e, f};
              ASSERT_EQ(measure_less(x, y), oracle_less(x, y));
            }
}

TEST(Types, MeasureIgnoresFirstComponent) {
  EXPECT_EQ(measure_of(T("c0 -> c1"), T("c0")), (MeasureTriple{1, 1, 0}));
}

TEST(Types, Proposition1) {
  const auto u = enumerate_universe({2, 2});
  for (const Ty& a : u) {
    if (!a.is_inter()) continue;
    for (const Ty& c : u)
      if (contained_in(a, c)) ASSERT_TRUE(contained_in(a.left(), c) && contained_in(a.right(), c));
  }
}

TEST(Types, TopPropagatesToPartsAndCod) {
  for (const Ty& a : enumerate_universe({2, 3})) {
    if (!is_top(a)) continue;
    for (const Ty& p : parts(a)) ASSERT_TRUE(is_top(p)) << print(a);
    if (auto c = cod(a)) ASSERT_TRUE(is_top(*c)) << print(a);
  }
}

TEST(Types, DomCodDefinedExactlyOnArrowParts) {
  for (const Ty& a : enumerate_universe({2, 3})) {
    const auto ps = parts(a);
    const bool arrows = std::all_of(ps.begin(), ps.end(), [](const Ty& p) { return p.is_arrow(); });
    ASSERT_EQ(dom(a).has_value(), arrows) << print(a);
    ASSERT_EQ(cod(a).has_value(), arrows) << print(a);
  }
}

TEST(Types, SubtermsKeepDuplicates) {
  EXPECT_EQ(subterms(T("c0 & c0")).size(), 3u);
  EXPECT_EQ(subterms(T("c0 -> c1")).front(), T("c0 -> c1"));
}
