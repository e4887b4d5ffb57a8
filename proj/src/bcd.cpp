#include "itsub/bcd.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "itsub/subtype.hpp"

namespace itsub {

namespace {

constexpr std::array<std::string_view, 9> kBcdRuleNames = {
    "refl", "trans", "incl_l", "incl_r", "glb", "arrow", "arrow_inter", "u_top", "u_arrow"};

std::size_t expected_premises(BcdRule rule) {
  switch (rule) {
    case BcdRule::Trans:
    case BcdRule::Glb:
    case BcdRule::Arrow:
      return 2;
    default:
      return 0;
  }
}

}  // namespace

std::string_view bcd_rule_name(BcdRule rule) {
  return kBcdRuleNames[static_cast<std::size_t>(rule)];
}

std::optional<BcdRule> bcd_rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kBcdRuleNames.size(); ++i)
    if (kBcdRuleNames[i] == name) return static_cast<BcdRule>(i);
  return std::nullopt;
}

BcdDerivation BcdDerivation::refl(Ty a) {
  Ty rhs = a;
  return BcdDerivation{std::make_shared<const Node>(
      Node{BcdRule::Refl, std::move(a), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

BcdDerivation BcdDerivation::trans(BcdDerivation left, BcdDerivation right) {
  Ty lhs = left.lhs();
  Ty rhs = right.rhs();
  Ty mid = left.rhs();
  return BcdDerivation{std::make_shared<const Node>(Node{BcdRule::Trans, std::move(lhs),
                                                         std::move(rhs), std::move(mid),
                                                         std::move(left.node_),
                                                         std::move(right.node_)})};
}

BcdDerivation BcdDerivation::incl_left(Ty lhs) {
  Ty rhs = lhs.left();
  return BcdDerivation{std::make_shared<const Node>(
      Node{BcdRule::InclL, std::move(lhs), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

BcdDerivation BcdDerivation::incl_right(Ty lhs) {
  Ty rhs = lhs.right();
  return BcdDerivation{std::make_shared<const Node>(
      Node{BcdRule::InclR, std::move(lhs), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

BcdDerivation BcdDerivation::glb(Ty rhs, BcdDerivation left, BcdDerivation right) {
  Ty lhs = left.lhs();
  return BcdDerivation{std::make_shared<const Node>(Node{BcdRule::Glb, std::move(lhs),
                                                         std::move(rhs), std::nullopt,
                                                         std::move(left.node_),
                                                         std::move(right.node_)})};
}

BcdDerivation BcdDerivation::arrow(BcdDerivation dom_premise, BcdDerivation cod_premise) {
  Ty lhs = Ty::arrow(dom_premise.rhs(), cod_premise.lhs());
  Ty rhs = Ty::arrow(dom_premise.lhs(), cod_premise.rhs());
  return BcdDerivation{std::make_shared<const Node>(Node{BcdRule::Arrow, std::move(lhs),
                                                         std::move(rhs), std::nullopt,
                                                         std::move(dom_premise.node_),
                                                         std::move(cod_premise.node_)})};
}

BcdDerivation BcdDerivation::arrow_inter(Ty lhs, Ty rhs) {
  return BcdDerivation{std::make_shared<const Node>(
      Node{BcdRule::ArrowInter, std::move(lhs), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

BcdDerivation BcdDerivation::u_top(Ty lhs) {
  return BcdDerivation{std::make_shared<const Node>(
      Node{BcdRule::UTop, std::move(lhs), Ty::top(), std::nullopt, nullptr, nullptr})};
}

BcdDerivation BcdDerivation::u_arrow(Ty rhs) {
  return BcdDerivation{std::make_shared<const Node>(
      Node{BcdRule::UArrow, Ty::top(), std::move(rhs), std::nullopt, nullptr, nullptr})};
}

BcdDerivation BcdDerivation::make(BcdRule rule, Ty lhs, Ty rhs, std::optional<Ty> mid,
                                  std::vector<BcdDerivation> premises) {
  if (premises.size() > 2) throw std::invalid_argument("a rule has at most two premises");
  std::shared_ptr<const Node> first = premises.size() > 0 ? premises[0].node_ : nullptr;
  std::shared_ptr<const Node> second = premises.size() > 1 ? premises[1].node_ : nullptr;
  return BcdDerivation{std::make_shared<const Node>(Node{rule, std::move(lhs), std::move(rhs),
                                                         std::move(mid), std::move(first),
                                                         std::move(second)})};
}

std::size_t BcdDerivation::premise_count() const noexcept {
  return node_->second ? 2 : (node_->first ? 1 : 0);
}

BcdDerivation BcdDerivation::premise(std::size_t i) const {
  if (i >= premise_count()) throw std::out_of_range("premise index");
  return BcdDerivation{i == 0 ? node_->first : node_->second};
}

std::size_t BcdDerivation::node_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < premise_count(); ++i) n += premise(i).node_count();
  return n;
}

std::size_t BcdDerivation::height() const {
  std::size_t h = 0;
  for (std::size_t i = 0; i < premise_count(); ++i) h = std::max(h, premise(i).height());
  return h + 1;
}

namespace {

ValidationReport bcd_validate_root(const BcdDerivation& d) {
  auto fail = [](std::string reason) { return ValidationReport::failure("$", std::move(reason)); };
  const Ty& lhs = d.lhs();
  const Ty& rhs = d.rhs();

  if (d.premise_count() != expected_premises(d.rule()))
    return fail("wrong number of premises for " + std::string(bcd_rule_name(d.rule())));
  if (d.mid().has_value() != (d.rule() == BcdRule::Trans))
    return fail("midpoint present exactly on trans");

  switch (d.rule()) {
    case BcdRule::Refl:
      if (!(lhs == rhs)) return fail("refl endpoints differ");
      return ValidationReport::success();

    case BcdRule::Trans: {
      const BcdDerivation l = d.premise(0);
      const BcdDerivation r = d.premise(1);
      const Ty& mid = *d.mid();
      if (!(l.lhs() == lhs) || !(l.rhs() == mid)) return fail("left premise must prove lhs <= mid");
      if (!(r.lhs() == mid) || !(r.rhs() == rhs)) return fail("right premise must prove mid <= rhs");
      return ValidationReport::success();
    }

    case BcdRule::InclL:
    case BcdRule::InclR: {
      if (!lhs.is_inter()) return fail("incl needs an intersection on the left");
      const Ty& component = d.rule() == BcdRule::InclL ? lhs.left() : lhs.right();
      if (!(component == rhs)) return fail("incl right side is not the chosen component");
      return ValidationReport::success();
    }

    case BcdRule::Glb: {
      if (!rhs.is_inter()) return fail("glb needs an intersection on the right");
      const BcdDerivation l = d.premise(0);
      const BcdDerivation r = d.premise(1);
      if (!(l.lhs() == lhs) || !(r.lhs() == lhs)) return fail("glb premises disagree on left side");
      if (!(l.rhs() == rhs.left())) return fail("glb left premise does not prove the left component");
      if (!(r.rhs() == rhs.right())) return fail("glb right premise does not prove the right component");
      return ValidationReport::success();
    }

    case BcdRule::Arrow: {
      if (!lhs.is_arrow() || !rhs.is_arrow()) return fail("arrow needs arrows on both sides");
      const BcdDerivation dp = d.premise(0);
      const BcdDerivation cp = d.premise(1);
      if (!(dp.lhs() == rhs.left()) || !(dp.rhs() == lhs.left()))
        return fail("domain premise must prove C <= A");
      if (!(cp.lhs() == lhs.right()) || !(cp.rhs() == rhs.right()))
        return fail("codomain premise must prove B <= D");
      return ValidationReport::success();
    }

    case BcdRule::ArrowInter: {
      if (!lhs.is_inter() || !lhs.left().is_arrow() || !lhs.right().is_arrow())
        return fail("arrow_inter needs (A -> B) & (A -> C) on the left");
      if (!rhs.is_arrow() || !rhs.right().is_inter())
        return fail("arrow_inter needs A -> (B & C) on the right");
      const Ty& f = lhs.left();
      const Ty& g = lhs.right();
      if (!(f.left() == g.left()) || !(f.left() == rhs.left())) return fail("arrow_inter domains differ");
      if (!(f.right() == rhs.right().left()) || !(g.right() == rhs.right().right()))
        return fail("arrow_inter codomains do not match");
      return ValidationReport::success();
    }

    case BcdRule::UTop:
      if (!rhs.is_top_atom()) return fail("u_top needs U on the right");
      return ValidationReport::success();

    case BcdRule::UArrow:
      if (!lhs.is_top_atom()) return fail("u_arrow needs U on the left");
      if (!rhs.is_arrow() || !rhs.right().is_top_atom()) return fail("u_arrow needs C -> U on the right");
      return ValidationReport::success();
  }
  return fail("unknown rule");
}

// The failing path is assembled on the way out, so success allocates nothing.
ValidationReport bcd_validate_at(const BcdDerivation& d) {
  ValidationReport here = bcd_validate_root(d);
  if (!here) return here;
  for (std::size_t i = 0; i < d.premise_count(); ++i) {
    auto sub = bcd_validate_at(d.premise(i));
    if (!sub) {
      sub.path = "$.premises[" + std::to_string(i) + "]" + sub.path.substr(1);
      return sub;
    }
  }
  return ValidationReport::success();
}

}  // namespace

ValidationReport bcd_validate(const BcdDerivation& d) { return bcd_validate_at(d); }

Derivation lemma_fun(const Derivation& d1, const Derivation& d2) {
  if (auto r = validate(d1); !r) throw std::invalid_argument("lemma_fun: first input invalid: " + r.reason);
  if (auto r = validate(d2); !r) throw std::invalid_argument("lemma_fun: second input invalid: " + r.reason);
  const Ty& a = d1.rhs();
  const Ty& b = d2.lhs();
  const Ty& c = d1.lhs();
  const Ty& d = d2.rhs();
  Ty lhs = Ty::arrow(a, b);
  Ty rhs = Ty::arrow(c, d);
  if (d.is_top()) return Derivation::u_arrow(std::move(lhs), std::move(rhs));
  // top(B) with B <: D would force top(D).
  if (b.is_top()) throw std::logic_error("lemma_fun: top codomain below a non-top one");
  Ty witness = lhs;
  return Derivation::arrow_prime(std::move(lhs), std::move(rhs), std::move(witness), d1, d2);
}

Derivation lemma_dist(const Ty& a, const Ty& b, const Ty& c) {
  Ty lhs = Ty::inter(Ty::arrow(a, b), Ty::arrow(a, c));
  Ty bc = Ty::inter(b, c);
  Ty rhs = Ty::arrow(a, bc);
  if (b.is_top() && c.is_top()) return Derivation::u_arrow(std::move(lhs), std::move(rhs));
  if (b.is_top()) {
    Derivation cod = Derivation::glb(bc, top_below(c, b), reflexivity(c));
    return Derivation::arrow_prime(lhs, rhs, lhs.right(), reflexivity(a), std::move(cod));
  }
  if (c.is_top()) {
    Derivation cod = Derivation::glb(bc, reflexivity(b), top_below(b, c));
    return Derivation::arrow_prime(lhs, rhs, lhs.left(), reflexivity(a), std::move(cod));
  }
  Derivation dom_premise = Derivation::glb(Ty::inter(a, a), reflexivity(a), reflexivity(a));
  Ty witness = lhs;
  return Derivation::arrow_prime(std::move(lhs), std::move(rhs), std::move(witness),
                                 std::move(dom_premise), reflexivity(bc));
}

BcdDerivation lemma_eta(const Ty& a) {
  switch (a.kind()) {
    case TyKind::Arrow:
      return BcdDerivation::refl(a);
    case TyKind::Inter: {
      BcdDerivation e1 = lemma_eta(a.left());
      BcdDerivation e2 = lemma_eta(a.right());
      const Ty& d1 = e1.rhs().left();
      const Ty& c1 = e1.rhs().right();
      const Ty& d2 = e2.rhs().left();
      const Ty& c2 = e2.rhs().right();
      Ty d12 = Ty::inter(d1, d2);
      // a <= a1 <= d1 -> c1 <= (d1 & d2) -> c1, and likewise on the right.
      BcdDerivation to1 = BcdDerivation::trans(
          BcdDerivation::trans(BcdDerivation::incl_left(a), e1),
          BcdDerivation::arrow(BcdDerivation::incl_left(d12), BcdDerivation::refl(c1)));
      BcdDerivation to2 = BcdDerivation::trans(
          BcdDerivation::trans(BcdDerivation::incl_right(a), e2),
          BcdDerivation::arrow(BcdDerivation::incl_right(d12), BcdDerivation::refl(c2)));
      Ty both = Ty::inter(to1.rhs(), to2.rhs());
      BcdDerivation pair = BcdDerivation::glb(both, std::move(to1), std::move(to2));
      BcdDerivation dist = BcdDerivation::arrow_inter(both, Ty::arrow(d12, Ty::inter(c1, c2)));
      return BcdDerivation::trans(std::move(pair), std::move(dist));
    }
    default:
      throw std::invalid_argument("lemma_eta: dom/cod undefined for an atom part");
  }
}

namespace {

BcdDerivation part_bcd(const Ty& a, const Ty& part) {
  if (a.is_inter()) {
    if (is_part(part, a.left()))
      return BcdDerivation::trans(BcdDerivation::incl_left(a), part_bcd(a.left(), part));
    if (is_part(part, a.right()))
      return BcdDerivation::trans(BcdDerivation::incl_right(a), part_bcd(a.right(), part));
  } else if (a == part) {
    return BcdDerivation::refl(a);
  }
  throw std::invalid_argument("containment_bcd: not a part");
}

BcdDerivation to_bcd_rec(const Derivation& d) {
  switch (d.rule()) {
    case Rule::ReflAtom:
      return BcdDerivation::refl(d.lhs());
    case Rule::LbL:
      return BcdDerivation::trans(BcdDerivation::incl_left(d.lhs()), to_bcd_rec(d.premise(0)));
    case Rule::LbR:
      return BcdDerivation::trans(BcdDerivation::incl_right(d.lhs()), to_bcd_rec(d.premise(0)));
    case Rule::Glb:
      return BcdDerivation::glb(d.rhs(), to_bcd_rec(d.premise(0)), to_bcd_rec(d.premise(1)));
    case Rule::ArrowPrime: {
      const Ty& w = *d.witness();
      BcdDerivation above = containment_bcd(d.lhs(), w);
      BcdDerivation eta = lemma_eta(w);
      BcdDerivation fun = BcdDerivation::arrow(to_bcd_rec(d.premise(0)), to_bcd_rec(d.premise(1)));
      return BcdDerivation::trans(std::move(above),
                                  BcdDerivation::trans(std::move(eta), std::move(fun)));
    }
    case Rule::UTop:
      return BcdDerivation::u_top(d.lhs());
    case Rule::UArrow: {
      // A <= U <= C -> U <= C -> D, the last step from U <= D.
      const Ty& c = d.rhs().left();
      const Ty& dd = d.rhs().right();
      BcdDerivation widen =
          BcdDerivation::arrow(BcdDerivation::refl(c), to_bcd_rec(top_below(Ty::top(), dd)));
      return BcdDerivation::trans(
          BcdDerivation::u_top(d.lhs()),
          BcdDerivation::trans(BcdDerivation::u_arrow(Ty::arrow(c, Ty::top())), std::move(widen)));
    }
  }
  throw std::logic_error("to_bcd: bad rule");
}

Derivation from_bcd_rec(const BcdDerivation& d) {
  switch (d.rule()) {
    case BcdRule::Refl:
      return reflexivity(d.lhs());
    case BcdRule::Trans:
      return trans_compose(from_bcd_rec(d.premise(0)), from_bcd_rec(d.premise(1)));
    case BcdRule::InclL:
      return Derivation::lb_left(d.lhs(), reflexivity(d.lhs().left()));
    case BcdRule::InclR:
      return Derivation::lb_right(d.lhs(), reflexivity(d.lhs().right()));
    case BcdRule::Glb:
      return Derivation::glb(d.rhs(), from_bcd_rec(d.premise(0)), from_bcd_rec(d.premise(1)));
    case BcdRule::Arrow:
      return lemma_fun(from_bcd_rec(d.premise(0)), from_bcd_rec(d.premise(1)));
    case BcdRule::ArrowInter: {
      const Ty& f = d.lhs().left();
      const Ty& g = d.lhs().right();
      return lemma_dist(f.left(), f.right(), g.right());
    }
    case BcdRule::UTop:
      return Derivation::u_top(d.lhs());
    case BcdRule::UArrow:
      return Derivation::u_arrow(d.lhs(), d.rhs());
  }
  throw std::logic_error("from_bcd: bad rule");
}

}  // namespace

BcdDerivation containment_bcd(const Ty& a, const Ty& b) {
  if (b.is_inter())
    return BcdDerivation::glb(b, containment_bcd(a, b.left()), containment_bcd(a, b.right()));
  return part_bcd(a, b);
}

BcdDerivation to_bcd(const Derivation& d) {
  if (auto r = validate(d); !r) throw std::invalid_argument("to_bcd: invalid certificate: " + r.reason);
  return to_bcd_rec(d);
}

Derivation from_bcd(const BcdDerivation& d) {
  if (auto r = bcd_validate(d); !r)
    throw std::invalid_argument("from_bcd: invalid certificate: " + r.reason);
  return from_bcd_rec(d);
}

}  // namespace itsub
