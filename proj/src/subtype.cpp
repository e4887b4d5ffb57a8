#include "itsub/subtype.hpp"

#include <string>
#include <vector>

namespace itsub {

namespace {

std::optional<Derivation> atom_chain(const Ty& a, const Ty& atom) {
  if (a.is_inter()) {
    if (auto sub = atom_chain(a.left(), atom)) return Derivation::lb_left(a, std::move(*sub));
    if (auto sub = atom_chain(a.right(), atom)) return Derivation::lb_right(a, std::move(*sub));
    return std::nullopt;
  }
  if (a == atom) return Derivation::refl_atom(a);
  return std::nullopt;
}

void collect_arrow_parts(const Ty& a, std::vector<Ty>& out) {
  if (a.is_inter()) {
    collect_arrow_parts(a.left(), out);
    collect_arrow_parts(a.right(), out);
  } else if (a.is_arrow()) {
    out.push_back(a);
  }
}

std::vector<Ty> arrow_parts(const Ty& a) {
  std::vector<Ty> out;
  collect_arrow_parts(a, out);
  return out;
}

}  // namespace

ValidationReport validate_factoring(const Factoring& f) {
  auto fail = [](std::string reason) { return ValidationReport::failure("factoring", std::move(reason)); };
  if (!contained_in(f.witness, f.against)) return fail("witness not contained in the factored type");
  if (top_in_cod(f.witness)) return fail("witness has a top codomain part");
  auto wdom = dom(f.witness);
  auto wcod = cod(f.witness);
  if (!wdom || !wcod) return fail("witness has no dom/cod");
  if (!(f.dom_premise.lhs() == f.lhs) || !(f.dom_premise.rhs() == *wdom))
    return fail("domain premise endpoints");
  if (!(f.cod_premise.lhs() == *wcod) || !(f.cod_premise.rhs() == f.rhs))
    return fail("codomain premise endpoints");
  if (auto r = validate(f.dom_premise); !r) return r;
  if (auto r = validate(f.cod_premise); !r) return r;
  return ValidationReport::success();
}

Derivation to_arrow_prime(const Factoring& f) {
  return Derivation::arrow_prime(f.against, Ty::arrow(f.lhs, f.rhs), f.witness, f.dom_premise,
                                 f.cod_premise);
}

std::optional<Derivation> check_sub(const Ty& a, const Ty& b) {
  switch (b.kind()) {
    case TyKind::Top:
      return Derivation::u_top(a);
    case TyKind::Const:
      return atom_chain(a, b);
    case TyKind::Inter: {
      auto l = check_sub(a, b.left());
      if (!l) return std::nullopt;
      auto r = check_sub(a, b.right());
      if (!r) return std::nullopt;
      return Derivation::glb(b, std::move(*l), std::move(*r));
    }
    case TyKind::Arrow: {
      if (b.right().is_top()) return Derivation::u_arrow(a, b);
      auto f = find_factor(a, b.left(), b.right());
      if (!f) return std::nullopt;
      return Derivation::arrow_prime(a, b, std::move(f->witness), std::move(f->dom_premise),
                                     std::move(f->cod_premise));
    }
  }
  return std::nullopt;
}

std::optional<Factoring> find_factor(const Ty& a, const Ty& c, const Ty& d) {
  if (d.is_top()) throw std::invalid_argument("find_factor: codomain must not be top");

  std::optional<Ty> witness;
  std::optional<Ty> witness_cod;
  std::optional<Derivation> dom_premise;
  for (const Ty& part : arrow_parts(a)) {
    if (part.right().is_top()) continue;
    auto below = check_sub(c, part.left());
    if (!below) continue;
    if (!witness) {
      witness = part;
      witness_cod = part.right();
      dom_premise = std::move(*below);
    } else {
      witness = Ty::inter(std::move(*witness), part);
      witness_cod = Ty::inter(std::move(*witness_cod), part.right());
      Ty dom_rhs = Ty::inter(dom_premise->rhs(), part.left());
      dom_premise = Derivation::glb(std::move(dom_rhs), std::move(*dom_premise), std::move(*below));
    }
  }
  if (!witness) return std::nullopt;

  auto cod_premise = check_sub(*witness_cod, d);
  if (!cod_premise) return std::nullopt;
  return Factoring{std::move(*witness), std::move(*dom_premise), std::move(*cod_premise), a, c, d};
}

std::optional<Factoring> find_factor_exhaustive(const Ty& a, const Ty& c, const Ty& d) {
  if (d.is_top()) throw std::invalid_argument("find_factor_exhaustive: codomain must not be top");
  const std::vector<Ty> arrows = arrow_parts(a);
  if (arrows.size() > 24) throw std::invalid_argument("find_factor_exhaustive: too many arrow parts");

  const std::uint64_t subsets = std::uint64_t{1} << arrows.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::optional<Ty> witness;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      witness = witness ? Ty::inter(std::move(*witness), arrows[i]) : arrows[i];
    }
    if (top_in_cod(*witness)) continue;
    auto dom_premise = check_sub(c, *dom(*witness));
    if (!dom_premise) continue;
    auto cod_premise = check_sub(*cod(*witness), d);
    if (!cod_premise) continue;
    return Factoring{std::move(*witness), std::move(*dom_premise), std::move(*cod_premise), a, c, d};
  }
  return std::nullopt;
}

namespace {

Factoring factor_all(const Ty& a, const Ty& b, const FactoringMap& per_part) {
  switch (a.kind()) {
    case TyKind::Arrow: {
      auto it = per_part.find(a);
      if (it == per_part.end())
        throw std::invalid_argument("lemma_factor_all: no factoring for an arrow part");
      const Factoring& f = it->second;
      if (!(f.against == b) || !(f.lhs == a.left()) || !(f.rhs == a.right()))
        throw std::invalid_argument("lemma_factor_all: factoring does not match its arrow part");
      return f;
    }
    case TyKind::Inter: {
      Factoring f1 = factor_all(a.left(), b, per_part);
      Factoring f2 = factor_all(a.right(), b, per_part);
      // dom(a) <: dom(W1) & dom(W2), from each side's premise through lb.
      Ty dom_a = Ty::inter(f1.lhs, f2.lhs);
      Ty dom_w = Ty::inter(f1.dom_premise.rhs(), f2.dom_premise.rhs());
      Derivation dom_premise =
          Derivation::glb(std::move(dom_w), Derivation::lb_left(dom_a, std::move(f1.dom_premise)),
                          Derivation::lb_right(dom_a, std::move(f2.dom_premise)));
      // cod(W1) & cod(W2) <: cod(a).
      Ty cod_a = Ty::inter(f1.rhs, f2.rhs);
      Ty cod_w = Ty::inter(f1.cod_premise.lhs(), f2.cod_premise.lhs());
      Derivation cod_premise =
          Derivation::glb(cod_a, Derivation::lb_left(cod_w, std::move(f1.cod_premise)),
                          Derivation::lb_right(cod_w, std::move(f2.cod_premise)));
      return Factoring{Ty::inter(std::move(f1.witness), std::move(f2.witness)),
                       std::move(dom_premise),
                       std::move(cod_premise),
                       b,
                       std::move(dom_a),
                       std::move(cod_a)};
    }
    default:
      throw std::logic_error("lemma_factor_all: atom reached");
  }
}

}  // namespace

Factoring lemma_factor_all(const Ty& a, const Ty& b, const FactoringMap& per_part) {
  if (top_in_cod(a)) throw std::invalid_argument("lemma_factor_all: top codomain part");
  if (!dom(a)) throw std::invalid_argument("lemma_factor_all: dom/cod undefined");
  return factor_all(a, b, per_part);
}

Derivation reflexivity(const Ty& a) {
  switch (a.kind()) {
    case TyKind::Top:
    case TyKind::Const:
      return Derivation::refl_atom(a);
    case TyKind::Arrow:
      if (a.right().is_top()) return Derivation::u_arrow(a, a);
      return Derivation::arrow_prime(a, a, a, reflexivity(a.left()), reflexivity(a.right()));
    case TyKind::Inter:
      return Derivation::glb(a, Derivation::lb_left(a, reflexivity(a.left())),
                             Derivation::lb_right(a, reflexivity(a.right())));
  }
  throw std::logic_error("reflexivity: bad kind");
}

Derivation top_below(const Ty& b, const Ty& a) {
  switch (a.kind()) {
    case TyKind::Top:
      return Derivation::u_top(b);
    case TyKind::Arrow:
      if (a.right().is_top()) return Derivation::u_arrow(b, a);
      break;
    case TyKind::Inter:
      if (a.is_top()) return Derivation::glb(a, top_below(b, a.left()), top_below(b, a.right()));
      break;
    case TyKind::Const:
      break;
  }
  throw std::invalid_argument("top_below: type is not top");
}

std::pair<Derivation, Derivation> split_glb(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Glb:
      return {d.premise(0), d.premise(1)};
    case Rule::LbL: {
      auto [l, r] = split_glb(d.premise(0));
      return {Derivation::lb_left(d.lhs(), std::move(l)), Derivation::lb_left(d.lhs(), std::move(r))};
    }
    case Rule::LbR: {
      auto [l, r] = split_glb(d.premise(0));
      return {Derivation::lb_right(d.lhs(), std::move(l)),
              Derivation::lb_right(d.lhs(), std::move(r))};
    }
    default:
      throw std::invalid_argument("split_glb: right side is not an intersection");
  }
}

Derivation project_part(const Derivation& d, const Ty& c) {
  const Ty& b = d.rhs();
  if (!b.is_inter()) {
    if (!(b == c)) throw std::invalid_argument("project_part: not a part");
    return d;
  }
  auto [l, r] = split_glb(d);
  if (is_part(c, b.left())) return project_part(l, c);
  return project_part(r, c);
}

Derivation project_contained(const Derivation& d, const Ty& c) {
  if (c.is_inter())
    return Derivation::glb(c, project_contained(d, c.left()), project_contained(d, c.right()));
  return project_part(d, c);
}

Factoring invert_arrow(const Derivation& d, const Ty& arrow_part) {
  switch (d.rule()) {
    case Rule::LbL:
    case Rule::LbR: {
      Factoring f = invert_arrow(d.premise(0), arrow_part);
      f.against = d.lhs();
      return f;
    }
    case Rule::Glb: {
      if (is_part(arrow_part, d.rhs().left())) return invert_arrow(d.premise(0), arrow_part);
      return invert_arrow(d.premise(1), arrow_part);
    }
    case Rule::ArrowPrime:
      if (!(d.rhs() == arrow_part)) throw std::invalid_argument("invert_arrow: not a part");
      return Factoring{*d.witness(), d.premise(0), d.premise(1),
                       d.lhs(),      d.rhs().left(), d.rhs().right()};
    default:
      throw std::invalid_argument("invert_arrow: no arrow part with a non-top codomain");
  }
}

namespace {

class Composer {
 public:
  explicit Composer(const ComposeOptions& options) : options_(options) {}

  Derivation compose(const Derivation& d1, const Derivation& d2,
                     const std::optional<MeasureTriple>& parent) {
    const MeasureTriple here = measure_of(d2.lhs(), d2.rhs());
    if (options_.stats) ++options_.stats->calls;
    if (options_.check_measure && parent) {
      if (options_.stats) ++options_.stats->measure_checks;
      if (!measure_less(here, *parent)) throw MeasureViolation("trans_compose: measure did not decrease");
    }

    switch (d2.rule()) {
      case Rule::ReflAtom:
        return d1;

      case Rule::LbL:
        return compose(split_glb(d1).first, d2.premise(0), here);

      case Rule::LbR:
        return compose(split_glb(d1).second, d2.premise(0), here);

      case Rule::Glb:
        return Derivation::glb(d2.rhs(), compose(d1, d2.premise(0), here),
                               compose(d1, d2.premise(1), here));

      case Rule::ArrowPrime: {
        const Ty& b_witness = *d2.witness();
        const Derivation a_below = project_contained(d1, b_witness);
        FactoringMap per_part;
        for (const Ty& part : parts(b_witness))
          if (!per_part.contains(part)) per_part.emplace(part, invert_arrow(a_below, part));
        Factoring f = lemma_factor_all(b_witness, d1.lhs(), per_part);
        Derivation dom_premise = compose(d2.premise(0), f.dom_premise, here);
        Derivation cod_premise = compose(f.cod_premise, d2.premise(1), here);
        return Derivation::arrow_prime(d1.lhs(), d2.rhs(), std::move(f.witness),
                                       std::move(dom_premise), std::move(cod_premise));
      }

      case Rule::UTop:
        return Derivation::u_top(d1.lhs());

      case Rule::UArrow:
        return Derivation::u_arrow(d1.lhs(), d2.rhs());
    }
    throw std::logic_error("trans_compose: bad rule");
  }

 private:
  ComposeOptions options_;
};

}  // namespace

Derivation trans_compose(const Derivation& d1, const Derivation& d2, const ComposeOptions& options) {
  if (!(d1.rhs() == d2.lhs())) throw std::invalid_argument("trans_compose: endpoints do not meet");
  if (auto r = validate(d1); !r) throw std::invalid_argument("trans_compose: first input invalid: " + r.reason);
  if (auto r = validate(d2); !r) throw std::invalid_argument("trans_compose: second input invalid: " + r.reason);
  return Composer{options}.compose(d1, d2, std::nullopt);
}

}  // namespace itsub
