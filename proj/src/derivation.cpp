#include "itsub/derivation.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>

namespace itsub {

namespace {

constexpr std::array<std::string_view, 7> kRuleNames = {
    "refl_atom", "lb_l", "lb_r", "glb", "arrow_prime", "u_top", "u_arrow"};

std::size_t expected_premises(Rule rule) {
  switch (rule) {
    case Rule::LbL:
    case Rule::LbR:
      return 1;
    case Rule::Glb:
    case Rule::ArrowPrime:
      return 2;
    default:
      return 0;
  }
}

}  // namespace

std::string_view rule_name(Rule rule) { return kRuleNames[static_cast<std::size_t>(rule)]; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  return std::nullopt;
}

Derivation Derivation::refl_atom(Ty atom) {
  Ty rhs = atom;
  return Derivation{std::make_shared<const Node>(
      Node{Rule::ReflAtom, std::move(atom), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

Derivation Derivation::lb_left(Ty lhs, Derivation sub) {
  Ty rhs = sub.rhs();
  return Derivation{std::make_shared<const Node>(
      Node{Rule::LbL, std::move(lhs), std::move(rhs), std::nullopt, std::move(sub.node_), nullptr})};
}

Derivation Derivation::lb_right(Ty lhs, Derivation sub) {
  Ty rhs = sub.rhs();
  return Derivation{std::make_shared<const Node>(
      Node{Rule::LbR, std::move(lhs), std::move(rhs), std::nullopt, std::move(sub.node_), nullptr})};
}

Derivation Derivation::glb(Ty rhs, Derivation left, Derivation right) {
  Ty lhs = left.lhs();
  return Derivation{std::make_shared<const Node>(Node{Rule::Glb, std::move(lhs), std::move(rhs),
                                                      std::nullopt, std::move(left.node_),
                                                      std::move(right.node_)})};
}

Derivation Derivation::arrow_prime(Ty lhs, Ty rhs, Ty witness, Derivation dom_premise,
                                   Derivation cod_premise) {
  return Derivation{std::make_shared<const Node>(
      Node{Rule::ArrowPrime, std::move(lhs), std::move(rhs), std::move(witness),
           std::move(dom_premise.node_), std::move(cod_premise.node_)})};
}

Derivation Derivation::u_top(Ty lhs) {
  return Derivation{std::make_shared<const Node>(
      Node{Rule::UTop, std::move(lhs), Ty::top(), std::nullopt, nullptr, nullptr})};
}

Derivation Derivation::u_arrow(Ty lhs, Ty rhs) {
  return Derivation{std::make_shared<const Node>(
      Node{Rule::UArrow, std::move(lhs), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

Derivation Derivation::make(Rule rule, Ty lhs, Ty rhs, std::optional<Ty> witness,
                            std::vector<Derivation> premises) {
  if (premises.size() > 2) throw std::invalid_argument("a rule has at most two premises");
  std::shared_ptr<const Node> first = premises.size() > 0 ? premises[0].node_ : nullptr;
  std::shared_ptr<const Node> second = premises.size() > 1 ? premises[1].node_ : nullptr;
  return Derivation{std::make_shared<const Node>(Node{rule, std::move(lhs), std::move(rhs),
                                                      std::move(witness), std::move(first),
                                                      std::move(second)})};
}

std::size_t Derivation::premise_count() const noexcept {
  return node_->second ? 2 : (node_->first ? 1 : 0);
}

Derivation Derivation::premise(std::size_t i) const {
  if (i >= premise_count()) throw std::out_of_range("premise index");
  return Derivation{i == 0 ? node_->first : node_->second};
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < premise_count(); ++i) n += premise(i).node_count();
  return n;
}

ValidationReport validate_root(const Derivation& d) {
  auto fail = [](std::string reason) { return ValidationReport::failure("$", std::move(reason)); };
  const Ty& lhs = d.lhs();
  const Ty& rhs = d.rhs();

  if (d.premise_count() != expected_premises(d.rule()))
    return fail("wrong number of premises for " + std::string(rule_name(d.rule())));
  if (d.witness().has_value() != (d.rule() == Rule::ArrowPrime))
    return fail("witness present exactly on arrow_prime");

  switch (d.rule()) {
    case Rule::ReflAtom:
      if (!lhs.is_atom()) return fail("refl_atom on a non-atom");
      if (!(lhs == rhs)) return fail("refl_atom endpoints differ");
      return ValidationReport::success();

    case Rule::LbL:
    case Rule::LbR: {
      if (!lhs.is_inter()) return fail("lb rule needs an intersection on the left");
      const Derivation sub = d.premise(0);
      const Ty& component = d.rule() == Rule::LbL ? lhs.left() : lhs.right();
      if (!(sub.lhs() == component)) return fail("premise left side is not the chosen component");
      if (!(sub.rhs() == rhs)) return fail("premise right side differs from conclusion");
      return ValidationReport::success();
    }

    case Rule::Glb: {
      if (!rhs.is_inter()) return fail("glb needs an intersection on the right");
      const Derivation l = d.premise(0);
      const Derivation r = d.premise(1);
      if (!(l.lhs() == lhs) || !(r.lhs() == lhs)) return fail("glb premises disagree on left side");
      if (!(l.rhs() == rhs.left())) return fail("glb left premise does not prove the left component");
      if (!(r.rhs() == rhs.right())) return fail("glb right premise does not prove the right component");
      return ValidationReport::success();
    }

    case Rule::ArrowPrime: {
      if (!rhs.is_arrow()) return fail("arrow_prime needs an arrow on the right");
      const Ty& w = *d.witness();
      if (!contained_in(w, lhs)) return fail("witness is not contained in the left side");
      if (rhs.right().is_top()) return fail("side condition: codomain of the right side is top");
      if (top_in_cod(w)) return fail("side condition: witness has a top codomain part");
      auto wdom = dom(w);
      auto wcod = cod(w);
      if (!wdom || !wcod) return fail("witness has no dom/cod");
      const Derivation dp = d.premise(0);
      const Derivation cp = d.premise(1);
      if (!(dp.lhs() == rhs.left()) || !(dp.rhs() == *wdom))
        return fail("domain premise must prove C <: dom(witness)");
      if (!(cp.lhs() == *wcod) || !(cp.rhs() == rhs.right()))
        return fail("codomain premise must prove cod(witness) <: D");
      return ValidationReport::success();
    }

    case Rule::UTop:
      if (!rhs.is_top_atom()) return fail("u_top needs U on the right");
      return ValidationReport::success();

    case Rule::UArrow:
      if (!rhs.is_arrow()) return fail("u_arrow needs an arrow on the right");
      if (!rhs.right().is_top()) return fail("side condition: codomain is not top");
      return ValidationReport::success();
  }
  return fail("unknown rule");
}

namespace {

// The failing path is assembled on the way out, so success allocates nothing.
ValidationReport validate_at(const Derivation& d) {
  ValidationReport here = validate_root(d);
  if (!here) return here;
  for (std::size_t i = 0; i < d.premise_count(); ++i) {
    auto sub = validate_at(d.premise(i));
    if (!sub) {
      sub.path = "$.premises[" + std::to_string(i) + "]" + sub.path.substr(1);
      return sub;
    }
  }
  return ValidationReport::success();
}

void collect_occurring(const Derivation& d, std::vector<Ty>& out) {
  out.push_back(d.lhs());
  out.push_back(d.rhs());
  if (d.witness()) {
    const Ty& w = *d.witness();
    out.push_back(w);
    if (auto x = dom(w)) out.push_back(std::move(*x));
    if (auto x = cod(w)) out.push_back(std::move(*x));
  }
  for (std::size_t i = 0; i < d.premise_count(); ++i) collect_occurring(d.premise(i), out);
}

}  // namespace

ValidationReport validate(const Derivation& d) { return validate_at(d); }

std::vector<Ty> occurring_types(const Derivation& d) {
  std::vector<Ty> out;
  collect_occurring(d, out);
  return out;
}

bool check_subformula_conjunction(const Derivation& d) {
  std::unordered_set<Ty, TyHash> subformulas;
  for (const Ty& t : subterms(d.lhs())) subformulas.insert(t);
  for (const Ty& t : subterms(d.rhs())) subformulas.insert(t);
  for (const Ty& t : occurring_types(d)) {
    if (subformulas.contains(t)) continue;
    for (const Ty& p : parts(t))
      if (!subformulas.contains(p)) return false;
  }
  return true;
}

}  // namespace itsub
