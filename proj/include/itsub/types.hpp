#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace itsub {

namespace detail {
struct TyNode;
}

enum class TyKind : std::uint8_t { Top, Const, Arrow, Inter };

/// An intersection type: the top constant U, an indexed constant c<i>,
/// an arrow A -> B, or an intersection A & B.
///
/// Values are immutable handles onto shared trees. Equality is structural;
/// intersections are never reordered, flattened or deduplicated.
class Ty {
 public:
  static Ty top();
  static Ty constant(std::uint64_t index);
  static Ty arrow(Ty dom, Ty cod);
  static Ty inter(Ty left, Ty right);

  TyKind kind() const noexcept;
  bool is_top_atom() const noexcept { return kind() == TyKind::Top; }
  bool is_const() const noexcept { return kind() == TyKind::Const; }
  bool is_atom() const noexcept { return kind() == TyKind::Top || kind() == TyKind::Const; }
  bool is_arrow() const noexcept { return kind() == TyKind::Arrow; }
  bool is_inter() const noexcept { return kind() == TyKind::Inter; }

  /// Constant index. Only meaningful for Const.
  std::uint64_t index() const noexcept;
  /// Children of Arrow (domain, codomain) and Inter (left, right).
  const Ty& left() const noexcept;
  const Ty& right() const noexcept;

  /// Node count of arrows and intersections; atoms have size 0.
  std::size_t size() const noexcept;
  /// Arrow nesting depth; intersections do not add to it.
  std::size_t depth() const noexcept;
  /// Whether the top-rules derive top(this); cached at construction.
  bool is_top() const noexcept;
  std::size_t hash() const noexcept;

  bool same_node(const Ty& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Ty& a, const Ty& b) noexcept;
  /// Structural order: Top < Const < Arrow < Inter, then index, then children
  /// lexicographically.
  friend std::strong_ordering operator<=>(const Ty& a, const Ty& b) noexcept;

 private:
  friend struct detail::TyNode;
  Ty() = default;
  explicit Ty(std::shared_ptr<const detail::TyNode> node) : node_(std::move(node)) {}
  static Ty make_composite(TyKind kind, Ty left, Ty right);

  std::shared_ptr<const detail::TyNode> node_;
};

namespace detail {
struct TyNode {
  TyKind kind;
  bool top;
  std::uint64_t index;
  std::size_t size;
  std::size_t depth;
  std::size_t hash;
  Ty left;
  Ty right;
};
}  // namespace detail

inline TyKind Ty::kind() const noexcept { return node_->kind; }
inline std::uint64_t Ty::index() const noexcept { return node_->index; }
inline const Ty& Ty::left() const noexcept { return node_->left; }
inline const Ty& Ty::right() const noexcept { return node_->right; }
inline std::size_t Ty::size() const noexcept { return node_->size; }
inline std::size_t Ty::depth() const noexcept { return node_->depth; }
inline bool Ty::is_top() const noexcept { return node_->top; }
inline std::size_t Ty::hash() const noexcept { return node_->hash; }


struct TyHash {
  std::size_t operator()(const Ty& t) const noexcept { return t.hash(); }
};

/// Atoms and arrows reached by descending through intersections only,
/// left to right, duplicates kept.
std::vector<Ty> parts(const Ty& a);
/// c is structurally equal to some part of b.
bool is_part(const Ty& c, const Ty& b);
/// Every part of a is a part of b.
bool contained_in(const Ty& a, const Ty& b);

/// Intersection of the domains of every part; absent unless every part is an
/// arrow.
std::optional<Ty> dom(const Ty& a);
std::optional<Ty> cod(const Ty& a);

bool is_top(const Ty& a);
/// Some arrow part of d has a top codomain.
bool top_in_cod(const Ty& d);

std::size_t size(const Ty& a);
std::size_t depth(const Ty& a);

/// The coordinates of <A, B, C> that the transitivity ordering inspects:
/// depth and size of the middle type, size of the right type.
struct MeasureTriple {
  std::size_t depth_mid = 0;
  std::size_t size_mid = 0;
  std::size_t size_right = 0;

  friend bool operator==(const MeasureTriple&, const MeasureTriple&) = default;
};

MeasureTriple measure_of(const Ty& mid, const Ty& right);

/// Strict ordering used by the transitivity recursion.
bool measure_less(const MeasureTriple& m1, const MeasureTriple& m2);

/// Every syntactic subterm of a, including a itself, preorder, duplicates kept.
std::vector<Ty> subterms(const Ty& a);

/// A structurally equal tree that shares no arrow or intersection nodes with a.
Ty deep_copy(const Ty& a);

}  // namespace itsub
