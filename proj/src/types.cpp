#include "itsub/types.hpp"

#include <algorithm>
#include <vector>

namespace itsub {

namespace {

constexpr std::size_t kTopHash = 0x9e3779b97f4a7c15ULL;

std::size_t mix(std::size_t seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

// Constants below this index are shared; larger ones are allocated on demand.
constexpr std::uint64_t kSharedConstants = 16;

}  // namespace

Ty Ty::top() {
  static const Ty u{std::make_shared<const detail::TyNode>(
      detail::TyNode{TyKind::Top, true, 0, 0, 0, kTopHash, Ty{}, Ty{}})};
  return u;
}

Ty Ty::constant(std::uint64_t index) {
  auto make = [](std::uint64_t i) {
    return Ty{std::make_shared<const detail::TyNode>(detail::TyNode{
        TyKind::Const, false, i, 0, 0, mix(0x51ed27, i), Ty{}, Ty{}})};
  };
  static const std::vector<Ty> shared = [&] {
    std::vector<Ty> out;
    for (std::uint64_t i = 0; i < kSharedConstants; ++i) out.push_back(make(i));
    return out;
  }();
  if (index < kSharedConstants) return shared[index];
  return make(index);
}

Ty Ty::make_composite(TyKind kind, Ty left, Ty right) {
  const bool arrow = kind == TyKind::Arrow;
  const bool top = arrow ? right.is_top() : (left.is_top() && right.is_top());
  const std::size_t size = 1 + left.size() + right.size();
  const std::size_t depth = std::max(left.depth(), right.depth()) + (arrow ? 1 : 0);
  const std::size_t hash =
      mix(mix(arrow ? 0xa77 : 0x1e7, left.hash()), right.hash());
  return Ty{std::make_shared<const detail::TyNode>(detail::TyNode{
      kind, top, 0, size, depth, hash, std::move(left), std::move(right)})};
}

Ty Ty::arrow(Ty dom, Ty cod) {
  return make_composite(TyKind::Arrow, std::move(dom), std::move(cod));
}

Ty Ty::inter(Ty left, Ty right) {
  return make_composite(TyKind::Inter, std::move(left), std::move(right));
}

bool operator==(const Ty& a, const Ty& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size())
    return false;
  switch (a.kind()) {
    case TyKind::Top:
      return true;
    case TyKind::Const:
      return a.index() == b.index();
    case TyKind::Arrow:
    case TyKind::Inter:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::strong_ordering operator<=>(const Ty& a, const Ty& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case TyKind::Top:
      return std::strong_ordering::equal;
    case TyKind::Const:
      return a.index() <=> b.index();
    case TyKind::Arrow:
    case TyKind::Inter:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

namespace {

void collect_parts(const Ty& a, std::vector<Ty>& out) {
  if (a.is_inter()) {
    collect_parts(a.left(), out);
    collect_parts(a.right(), out);
  } else {
    out.push_back(a);
  }
}

template <typename Fn>
bool any_part(const Ty& a, Fn&& fn) {
  if (a.is_inter()) return any_part(a.left(), fn) || any_part(a.right(), fn);
  return fn(a);
}

template <typename Fn>
bool all_parts(const Ty& a, Fn&& fn) {
  if (a.is_inter()) return all_parts(a.left(), fn) && all_parts(a.right(), fn);
  return fn(a);
}

}  // namespace

std::vector<Ty> parts(const Ty& a) {
  std::vector<Ty> out;
  collect_parts(a, out);
  return out;
}

bool is_part(const Ty& c, const Ty& b) {
  if (c.is_inter()) return false;
  return any_part(b, [&](const Ty& p) { return p == c; });
}

bool contained_in(const Ty& a, const Ty& b) {
  return all_parts(a, [&](const Ty& p) { return is_part(p, b); });
}

std::optional<Ty> dom(const Ty& a) {
  switch (a.kind()) {
    case TyKind::Arrow:
      return a.left();
    case TyKind::Inter: {
      auto l = dom(a.left());
      if (!l) return std::nullopt;
      auto r = dom(a.right());
      if (!r) return std::nullopt;
      return Ty::inter(std::move(*l), std::move(*r));
    }
    default:
      return std::nullopt;
  }
}

std::optional<Ty> cod(const Ty& a) {
  switch (a.kind()) {
    case TyKind::Arrow:
      return a.right();
    case TyKind::Inter: {
      auto l = cod(a.left());
      if (!l) return std::nullopt;
      auto r = cod(a.right());
      if (!r) return std::nullopt;
      return Ty::inter(std::move(*l), std::move(*r));
    }
    default:
      return std::nullopt;
  }
}

bool is_top(const Ty& a) { return a.is_top(); }

bool top_in_cod(const Ty& d) {
  return any_part(d, [](const Ty& p) { return p.is_arrow() && p.right().is_top(); });
}

std::size_t size(const Ty& a) { return a.size(); }
std::size_t depth(const Ty& a) { return a.depth(); }

MeasureTriple measure_of(const Ty& mid, const Ty& right) {
  return MeasureTriple{mid.depth(), mid.size(), right.size()};
}

bool measure_less(const MeasureTriple& m1, const MeasureTriple& m2) {
  return m1.depth_mid < m2.depth_mid ||
         (m1.depth_mid <= m2.depth_mid && m1.size_mid < m2.size_mid) ||
         (m1.depth_mid <= m2.depth_mid && m1.size_mid <= m2.size_mid &&
          m1.size_right < m2.size_right);
}

namespace {
void collect_subterms(const Ty& a, std::vector<Ty>& out) {
  out.push_back(a);
  if (a.is_arrow() || a.is_inter()) {
    collect_subterms(a.left(), out);
    collect_subterms(a.right(), out);
  }
}
}  // namespace

std::vector<Ty> subterms(const Ty& a) {
  std::vector<Ty> out;
  collect_subterms(a, out);
  return out;
}

Ty deep_copy(const Ty& a) {
  switch (a.kind()) {
    case TyKind::Top:
      return Ty::top();
    case TyKind::Const:
      return Ty::constant(a.index());
    case TyKind::Arrow:
      return Ty::arrow(deep_copy(a.left()), deep_copy(a.right()));
    case TyKind::Inter:
      return Ty::inter(deep_copy(a.left()), deep_copy(a.right()));
  }
  return a;
}

}  // namespace itsub
