#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "itsub/derivation.hpp"
#include "itsub/types.hpp"

namespace itsub {

/// Rules of the classic system with transitivity and distributivity.
enum class BcdRule : std::uint8_t { Refl, Trans, InclL, InclR, Glb, Arrow, ArrowInter, UTop, UArrow };

std::string_view bcd_rule_name(BcdRule rule);
std::optional<BcdRule> bcd_rule_from_name(std::string_view name);

/// A proof tree for `lhs <= rhs`. Premises in rule order: Trans (left, right)
/// with the midpoint stored, Glb (left, right), Arrow (domain premise
/// `C <= A`, codomain premise `B <= D`).
class BcdDerivation {
 public:
  static BcdDerivation refl(Ty a);
  static BcdDerivation trans(BcdDerivation left, BcdDerivation right);
  static BcdDerivation incl_left(Ty lhs);
  static BcdDerivation incl_right(Ty lhs);
  static BcdDerivation glb(Ty rhs, BcdDerivation left, BcdDerivation right);
  static BcdDerivation arrow(BcdDerivation dom_premise, BcdDerivation cod_premise);
  static BcdDerivation arrow_inter(Ty lhs, Ty rhs);
  static BcdDerivation u_top(Ty lhs);
  static BcdDerivation u_arrow(Ty rhs);

  /// Unchecked general constructor, also used by deserialization.
  static BcdDerivation make(BcdRule rule, Ty lhs, Ty rhs, std::optional<Ty> mid,
                            std::vector<BcdDerivation> premises);

  BcdRule rule() const noexcept { return node_->rule; }
  const Ty& lhs() const noexcept { return node_->lhs; }
  const Ty& rhs() const noexcept { return node_->rhs; }
  const std::optional<Ty>& mid() const noexcept { return node_->mid; }

  std::size_t premise_count() const noexcept;
  BcdDerivation premise(std::size_t i) const;
  std::size_t node_count() const;
  std::size_t height() const;

 private:
  struct Node {
    BcdRule rule;
    Ty lhs;
    Ty rhs;
    std::optional<Ty> mid;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
  };
  explicit BcdDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

ValidationReport bcd_validate(const BcdDerivation& d);

inline constexpr std::size_t kDefaultBcdSearchDepth = 8;

/// Depth-bounded proof search for `a <= b` (depth = derivation height).
/// Transitivity midpoints come only from the subterms of `a` and `b` and the
/// intersections of two distinct subterm arrows sharing a domain. Absence is
/// inconclusive.
std::optional<BcdDerivation> bcd_search(const Ty& a, const Ty& b,
                                        std::size_t max_depth = kDefaultBcdSearchDepth);

/// `A -> B <: C -> D` from `C <: A` (d1) and `B <: D` (d2).
Derivation lemma_fun(const Derivation& d1, const Derivation& d2);

/// `(A -> B) & (A -> C) <: A -> (B & C)`.
Derivation lemma_dist(const Ty& a, const Ty& b, const Ty& c);

/// `a <= dom(a) -> cod(a)`. Throws std::invalid_argument when dom/cod are
/// undefined.
BcdDerivation lemma_eta(const Ty& a);

/// `b <= a` in the classic system from `a` containing `b`.
BcdDerivation containment_bcd(const Ty& a, const Ty& b);

/// Translations between the two systems. Inputs are validated first and
/// invalid ones throw std::invalid_argument. Endpoints are preserved.
BcdDerivation to_bcd(const Derivation& d);
Derivation from_bcd(const BcdDerivation& d);

}  // namespace itsub
