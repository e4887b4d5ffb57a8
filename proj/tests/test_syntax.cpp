#include <gtest/gtest.h>

#include <json.hpp>

#include "itsub/bcd.hpp"
#include "itsub/harness.hpp"
#include "itsub/subtype.hpp"
#include "itsub/syntax.hpp"

using namespace itsub;

namespace {

Ty c(std::uint64_t i) { return Ty::constant(i); }
Ty arr(Ty a, Ty b) { return Ty::arrow(std::move(a), std::move(b)); }
Ty inter(Ty a, Ty b) { return Ty::inter(std::move(a), std::move(b)); }

}  // namespace

TEST(Parse, Precedence) {
  EXPECT_EQ(parse("c0 & c1 -> c2"), arr(inter(c(0), c(1)), c(2)));
  EXPECT_EQ(parse("c0 -> c1 -> c2"), arr(c(0), arr(c(1), c(2))));
  EXPECT_EQ(parse("c0 & c1 & c2"), inter(inter(c(0), c(1)), c(2)));
  EXPECT_EQ(parse("(c0 -> c1) & c2"), inter(arr(c(0), c(1)), c(2)));
  EXPECT_EQ(parse("U"), Ty::top());
  EXPECT_EQ(parse("  c12\t->\nU "), arr(c(12), Ty::top()));
}

TEST(Parse, UnicodeAliases) {
  EXPECT_EQ(parse("c0 → c1 ∩ c2"), parse("c0 -> c1 & c2"));
}

TEST(Parse, ErrorOffsets) {
  try {
    parse("c0->");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().start, 4u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"\"U\"", "\"c\" digits", "\"(\""}));
  }
  for (const char* bad : {"", "c", "(c0", "c0 c1", "c0 &", "x", "c0 -> -> c1", "c99999999999999999999999"})
    EXPECT_THROW(parse(bad), ParseError) << bad;
  try {
    parse("(c0 & c1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().start, 8u);
  }
}

TEST(Print, Examples) {
  EXPECT_EQ(print(arr(inter(c(0), c(1)), c(2))), "c0 & c1 -> c2");
  EXPECT_EQ(print(arr(arr(c(0), c(1)), c(2))), "(c0 -> c1) -> c2");
  EXPECT_EQ(print(arr(c(0), arr(c(1), c(2)))), "c0 -> c1 -> c2");
  EXPECT_EQ(print(inter(arr(c(0), c(1)), c(2))), "(c0 -> c1) & c2");
  EXPECT_EQ(print(inter(c(0), arr(c(1), c(2)))), "c0 & (c1 -> c2)");
  EXPECT_EQ(print(inter(inter(c(0), c(1)), c(2))), "c0 & c1 & c2");
  EXPECT_EQ(print(inter(c(0), inter(c(1), c(2)))), "c0 & (c1 & c2)");
  EXPECT_EQ(print(Ty::top()), "U");
}

TEST(Print, RoundTripsUniverse) {
  for (const Ty& t : enumerate_universe({2, 3})) ASSERT_EQ(parse(print(t)), t) << print(t);
}

TEST(Print, RoundTripsRandomTypes) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const Ty t = random_type(s, 4, 6);
    ASSERT_EQ(parse(print(t)), t) << print(t);
  }
}

TEST(Json, ExactBytes) {
  auto d = check_sub(parse("c0"), parse("c0"));
  EXPECT_EQ(derivation_to_json(*d), R"({"rule":"refl_atom","lhs":"c0","rhs":"c0","premises":[]})");
}

TEST(Json, KeyOrder) {
  auto d = check_sub(parse("(c0 -> c1) & (c0 -> c2)"), parse("c0 -> c1 & c2"));
  const auto j = nlohmann::ordered_json::parse(derivation_to_json(*d));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"rule", "lhs", "rhs", "witness", "premises"}));

  BcdDerivation t = to_bcd(*d);
  ASSERT_EQ(t.rule(), BcdRule::Trans);
  const auto k = nlohmann::ordered_json::parse(derivation_to_json(t));
  keys.clear();
  for (auto it = k.begin(); it != k.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"rule", "lhs", "rhs", "mid", "premises"}));
}

TEST(Json, RoundTrip) {
  const auto u = enumerate_universe({2, 2});
  for (const Ty& a : u)
    for (const Ty& b : u) {
      auto d = check_sub(a, b);
      if (!d) continue;
      const std::string s = derivation_to_json(*d);
      Derivation back = derivation_from_json(s);
      ASSERT_TRUE(validate(back).ok);
      ASSERT_EQ(derivation_to_json(back), s);
      const std::string t = derivation_to_json(to_bcd(*d));
      ASSERT_EQ(derivation_to_json(bcd_derivation_from_json(t)), t);
    }
}

TEST(Json, RejectsInvalid) {
  Derivation bad = Derivation::make(Rule::ReflAtom, c(0), c(1), std::nullopt, {});
  EXPECT_THROW(derivation_to_json(bad), std::invalid_argument);
  for (const char* s : {"", "[]", "{}", R"({"rule":"trans","lhs":"c0","rhs":"c0","premises":[]})",
                        R"({"rule":"refl_atom","lhs":"c0 ->","rhs":"c0","premises":[]})",
                        R"({"rule":"refl_atom","lhs":"c0","rhs":"c0"})"})
    EXPECT_THROW(derivation_from_json(s), std::invalid_argument) << s;
  // Well-formed but wrong: parses, then fails validation.
  Derivation wrong = derivation_from_json(R"({"rule":"refl_atom","lhs":"c0","rhs":"c1","premises":[]})");
  EXPECT_FALSE(validate(wrong).ok);
}

TEST(Tree, Format) {
  auto d = check_sub(parse("c0 & c1"), parse("c1"));
  EXPECT_EQ(derivation_to_tree(*d), "c0 & c1 <: c1  [lb_r]\n  c1 <: c1  [refl_atom]\n");
}
