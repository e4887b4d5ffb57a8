#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "itsub/bcd.hpp"

// Goal-directed, depth-bounded search for classic derivations.
//
// Every type the search can mention is interned into a small pool: the
// distinct subterms of both endpoints, plus those intersections of two
// distinct subterm arrows with a common domain (the only intersections that
// can usefully sit in the middle of a transitivity step, since the left
// premise of such a step can then only be glb). Goals are pairs of pool
// indices; a memo records the lowest height proved so far and the highest
// bound that is known to fail.
//
// Rule order per goal: axioms, then glb when the right side is an
// intersection (committed, glb is invertible), then arrow, then trans over
// the midpoint candidates of the left side.

namespace itsub {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Entry {
  TyKind kind;
  std::uint64_t index = 0;
  std::uint32_t left = kNone;
  std::uint32_t right = kNone;
};

struct Goal {
  std::uint32_t height = 0;  // 0: not proved
  std::uint32_t fail_bound = 0;
  BcdRule rule = BcdRule::Refl;
  std::uint32_t mid = kNone;
};

class Search {
 public:
  Search(const Ty& a, const Ty& b) {
    root_lhs_ = intern(a);
    root_rhs_ = intern(b);
    subterm_count_ = static_cast<std::uint32_t>(entries_.size());
    add_distributive_mids();
    build_candidates();
    memo_.assign(entries_.size() * entries_.size(), Goal{});
  }

  std::optional<BcdDerivation> run(std::size_t max_depth) {
    const auto bound = static_cast<std::uint32_t>(
        std::min<std::size_t>(max_depth, std::numeric_limits<std::uint32_t>::max() - 1));
    for (std::uint32_t k = 1; k <= bound; ++k)
      if (prove(root_lhs_, root_rhs_, k)) return build(root_lhs_, root_rhs_);
    return std::nullopt;
  }

 private:
  std::uint32_t find(TyKind kind, std::uint64_t index, std::uint32_t l, std::uint32_t r) const {
    for (std::uint32_t i = 0; i < entries_.size(); ++i) {
      const Entry& e = entries_[i];
      if (e.kind == kind && e.index == index && e.left == l && e.right == r) return i;
    }
    return kNone;
  }

  std::uint32_t intern(const Ty& t) {
    Entry e{t.kind()};
    if (t.is_const()) e.index = t.index();
    if (t.is_arrow() || t.is_inter()) {
      e.left = intern(t.left());
      e.right = intern(t.right());
    }
    if (auto i = find(e.kind, e.index, e.left, e.right); i != kNone) return i;
    entries_.push_back(e);
    types_.emplace_back(t);
    return static_cast<std::uint32_t>(entries_.size() - 1);
  }

  void add_distributive_mids() {
    for (std::uint32_t p = 0; p < subterm_count_; ++p) {
      if (entries_[p].kind != TyKind::Arrow) continue;
      for (std::uint32_t q = 0; q < subterm_count_; ++q) {
        if (entries_[q].kind != TyKind::Arrow || entries_[p].left != entries_[q].left) continue;
        std::uint32_t i = find(TyKind::Inter, 0, p, q);
        if (i == kNone) {
          if (p == q) continue;
          entries_.push_back(Entry{TyKind::Inter, 0, p, q});
          types_.emplace_back(std::nullopt);
          i = static_cast<std::uint32_t>(entries_.size() - 1);
        }
        distributive_.push_back(i);
      }
    }
  }

  bool is_distributive(std::uint32_t x) const {
    const Entry& e = entries_[x];
    if (e.kind != TyKind::Inter) return false;
    const Entry& p = entries_[e.left];
    const Entry& q = entries_[e.right];
    return p.kind == TyKind::Arrow && q.kind == TyKind::Arrow && p.left == q.left;
  }

  void build_candidates() {
    const std::uint32_t n = static_cast<std::uint32_t>(entries_.size());
    top_ = find(TyKind::Top, 0, kNone, kNone);
    candidates_.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      const Entry& e = entries_[x];
      std::vector<std::uint32_t>& out = candidates_[x];
      if (e.kind == TyKind::Inter) {
        out.push_back(e.left);
        out.push_back(e.right);
      }
      if (top_ != kNone) out.push_back(top_);
      for (std::uint32_t m = 0; m < subterm_count_; ++m) {
        const Entry& me = entries_[m];
        if (me.kind != TyKind::Arrow) continue;
        if (e.kind == TyKind::Arrow) out.push_back(m);
        if (e.kind == TyKind::Top && me.right == top_) out.push_back(m);
      }
      if (is_distributive(x)) {
        const Entry& p = entries_[e.left];
        const Entry& q = entries_[e.right];
        std::uint32_t cod = find(TyKind::Inter, 0, p.right, q.right);
        if (cod != kNone) {
          std::uint32_t m = find(TyKind::Arrow, 0, p.left, cod);
          if (m != kNone) out.push_back(m);
        }
      }
      out.insert(out.end(), distributive_.begin(), distributive_.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      out.erase(std::remove(out.begin(), out.end(), x), out.end());
    }
  }

  Goal& goal(std::uint32_t x, std::uint32_t y) { return memo_[x * entries_.size() + y]; }

  std::optional<BcdRule> axiom(std::uint32_t x, std::uint32_t y) const {
    const Entry& ex = entries_[x];
    const Entry& ey = entries_[y];
    if (ey.kind == TyKind::Top) return BcdRule::UTop;
    if (x == y) return BcdRule::Refl;
    if (ex.kind == TyKind::Inter) {
      if (ex.left == y) return BcdRule::InclL;
      if (ex.right == y) return BcdRule::InclR;
    }
    if (ex.kind == TyKind::Top && ey.kind == TyKind::Arrow && ey.right == top_)
      return BcdRule::UArrow;
    if (is_distributive(x) && ey.kind == TyKind::Arrow) {
      const Entry& p = entries_[ex.left];
      const Entry& q = entries_[ex.right];
      const Entry& cod = entries_[ey.right];
      if (ey.left == p.left && cod.kind == TyKind::Inter && cod.left == p.right &&
          cod.right == q.right)
        return BcdRule::ArrowInter;
    }
    return std::nullopt;
  }

  bool record(Goal& g, BcdRule rule, std::uint32_t height, std::uint32_t mid = kNone) {
    if (g.height == 0 || height < g.height) {
      g.height = height;
      g.rule = rule;
      g.mid = mid;
    }
    return true;
  }

  // memo_ is sized once in the constructor, so goal references stay valid
  // across the recursion.
  bool prove(std::uint32_t x, std::uint32_t y, std::uint32_t k) {
    Goal& g = goal(x, y);
    if (g.height != 0 && g.height <= k) return true;
    if (k <= g.fail_bound) return false;

    if (auto rule = axiom(x, y)) return record(g, *rule, 1);

    if (k >= 2) {
      const Entry& ex = entries_[x];
      const Entry& ey = entries_[y];
      if (ey.kind == TyKind::Inter) {
        if (prove(x, ey.left, k - 1) && prove(x, ey.right, k - 1))
          return record(g, BcdRule::Glb,
                        1 + std::max(goal(x, ey.left).height, goal(x, ey.right).height));
        g.fail_bound = std::max(g.fail_bound, k);
        return false;
      }
      if (ex.kind == TyKind::Arrow && ey.kind == TyKind::Arrow) {
        if (prove(ey.left, ex.left, k - 1) && prove(ex.right, ey.right, k - 1))
          return record(g, BcdRule::Arrow,
                        1 + std::max(goal(ey.left, ex.left).height, goal(ex.right, ey.right).height));
      }
      for (std::uint32_t m : candidates_[x]) {
        if (m == y) continue;
        if (prove(x, m, k - 1) && prove(m, y, k - 1))
          return record(g, BcdRule::Trans, 1 + std::max(goal(x, m).height, goal(m, y).height), m);
      }
    }
    g.fail_bound = std::max(g.fail_bound, k);
    return false;
  }

  const Ty& type_of(std::uint32_t i) {
    if (!types_[i]) {
      const Entry& e = entries_[i];
      types_[i] = Ty::inter(type_of(e.left), type_of(e.right));
    }
    return *types_[i];
  }

  BcdDerivation build(std::uint32_t x, std::uint32_t y) {
    const Goal& g = goal(x, y);
    const Entry& ex = entries_[x];
    const Entry& ey = entries_[y];
    switch (g.rule) {
      case BcdRule::Refl:
        return BcdDerivation::refl(type_of(x));
      case BcdRule::UTop:
        return BcdDerivation::u_top(type_of(x));
      case BcdRule::InclL:
        return BcdDerivation::incl_left(type_of(x));
      case BcdRule::InclR:
        return BcdDerivation::incl_right(type_of(x));
      case BcdRule::UArrow:
        return BcdDerivation::u_arrow(type_of(y));
      case BcdRule::ArrowInter:
        return BcdDerivation::arrow_inter(type_of(x), type_of(y));
      case BcdRule::Glb:
        return BcdDerivation::glb(type_of(y), build(x, ey.left), build(x, ey.right));
      case BcdRule::Arrow:
        return BcdDerivation::arrow(build(ey.left, ex.left), build(ex.right, ey.right));
      case BcdRule::Trans:
        return BcdDerivation::trans(build(x, g.mid), build(g.mid, y));
    }
    return BcdDerivation::refl(type_of(x));
  }

  std::vector<Entry> entries_;
  std::vector<std::optional<Ty>> types_;
  std::uint32_t subterm_count_ = 0;
  std::uint32_t root_lhs_ = 0;
  std::uint32_t root_rhs_ = 0;
  std::uint32_t top_ = kNone;
  std::vector<std::uint32_t> distributive_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<Goal> memo_;
};

}  // namespace

std::optional<BcdDerivation> bcd_search(const Ty& a, const Ty& b, std::size_t max_depth) {
  return Search{a, b}.run(max_depth);
}

}  // namespace itsub
