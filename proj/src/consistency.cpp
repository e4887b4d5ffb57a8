#include "itsub/consistency.hpp"

namespace itsub {

namespace {

bool part_consistent(const Ty& p, const Ty& q) {
  if (p.is_top() || q.is_top()) return true;
  if (p.is_const() && q.is_const()) return p.index() == q.index();
  if (p.is_arrow() && q.is_arrow())
    return !consistent(p.left(), q.left()) || consistent(p.right(), q.right());
  return false;
}

bool all_against(const Ty& p, const Ty& b) {
  if (b.is_inter()) return all_against(p, b.left()) && all_against(p, b.right());
  return part_consistent(p, b);
}

}  // namespace

bool consistent(const Ty& a, const Ty& b) {
  if (a.is_inter()) return consistent(a.left(), b) && consistent(a.right(), b);
  return all_against(a, b);
}

bool self_consistent(const Ty& a) { return consistent(a, a); }

}  // namespace itsub
