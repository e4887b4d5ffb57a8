#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itsub/types.hpp"

namespace itsub {

/// Rules of the transitivity-free system.
enum class Rule : std::uint8_t { ReflAtom, LbL, LbR, Glb, ArrowPrime, UTop, UArrow };

std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

/// A proof tree for `lhs <: rhs`. Premises are stored in rule order:
/// LbL/LbR have one (the premise on the chosen component), Glb has two
/// (left, right), ArrowPrime has two (domain premise, codomain premise).
/// ArrowPrime also stores its existential witness.
///
/// Construction never checks anything; use validate().
class Derivation {
 public:
  static Derivation refl_atom(Ty atom);
  static Derivation lb_left(Ty lhs, Derivation sub);
  static Derivation lb_right(Ty lhs, Derivation sub);
  static Derivation glb(Ty rhs, Derivation left, Derivation right);
  static Derivation arrow_prime(Ty lhs, Ty rhs, Ty witness, Derivation dom_premise,
                                Derivation cod_premise);
  static Derivation u_top(Ty lhs);
  static Derivation u_arrow(Ty lhs, Ty rhs);

  /// Unchecked general constructor, also used by deserialization.
  static Derivation make(Rule rule, Ty lhs, Ty rhs, std::optional<Ty> witness,
                         std::vector<Derivation> premises);

  Rule rule() const noexcept { return node_->rule; }
  const Ty& lhs() const noexcept { return node_->lhs; }
  const Ty& rhs() const noexcept { return node_->rhs; }
  const std::optional<Ty>& witness() const noexcept { return node_->witness; }

  std::size_t premise_count() const noexcept;
  Derivation premise(std::size_t i) const;

  /// Total number of nodes in the tree.
  std::size_t node_count() const;

  bool same_node(const Derivation& other) const noexcept { return node_ == other.node_; }

 private:
  struct Node {
    Rule rule;
    Ty lhs;
    Ty rhs;
    std::optional<Ty> witness;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
  };
  explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Outcome of re-checking a certificate. On failure `path` names the first
/// offending node ("$" is the root, "$.premises[1].premises[0]" a descendant)
/// and `reason` the violated premise or side condition.
struct ValidationReport {
  bool ok = true;
  std::string path;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }

  static ValidationReport success() { return {}; }
  static ValidationReport failure(std::string path, std::string reason) {
    return {false, std::move(path), std::move(reason)};
  }
};

ValidationReport validate(const Derivation& d);

/// Checks only that the root node instantiates its rule against its direct
/// premises' endpoints; premises themselves are not descended into.
ValidationReport validate_root(const Derivation& d);

/// Every endpoint in the tree plus each ArrowPrime witness and its dom/cod.
std::vector<Ty> occurring_types(const Derivation& d);

/// Every occurring type is a subterm of an endpoint of the root, or an
/// intersection of parts that are such subterms.
bool check_subformula_conjunction(const Derivation& d);

}  // namespace itsub
