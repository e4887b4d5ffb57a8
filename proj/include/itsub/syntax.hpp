#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itsub/bcd.hpp"
#include "itsub/derivation.hpp"
#include "itsub/types.hpp"

namespace itsub {

/// Byte offsets [start, end) into parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::vector<std::string> expected, const std::string& message)
      : std::runtime_error(message), span_(span), expected_(std::move(expected)) {}

  SourceSpan span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Grammar, whitespace-insensitive:
///
///   type  := inter ("->" type)?          arrows associate to the right
///   inter := prim ("&" prim)*            left-associative, binds tighter
///   prim  := "U" | "c" digits | "(" type ")"
///
/// "→" and "∩" are accepted as aliases of "->" and "&".
Ty parse(std::string_view text);

/// Minimal-parenthesis rendering that parses back to an equal tree.
/// Intersections nested on the right of an intersection are parenthesized.
std::string print(const Ty& a);

/// One JSON object per node: "rule", "lhs", "rhs", then "witness" (new
/// system) or "mid" (classic system) where the rule has one, then
/// "premises". Keys appear in exactly that order. Invalid certificates throw
/// std::invalid_argument.
std::string derivation_to_json(const Derivation& d);
std::string derivation_to_json(const BcdDerivation& d);

/// Inverse of derivation_to_json. Throws std::invalid_argument on malformed
/// input (including type syntax errors); the result is not validated.
Derivation derivation_from_json(std::string_view json);
BcdDerivation bcd_derivation_from_json(std::string_view json);

/// Indented, human-readable rendering: one judgement per line with its rule.
std::string derivation_to_tree(const Derivation& d);
std::string derivation_to_tree(const BcdDerivation& d);

}  // namespace itsub
