#pragma once

#include "itsub/types.hpp"

namespace itsub {

/// Part-wise consistency: every part of `a` is consistent with every part of
/// `b`. Constants agree iff equal, a top part (U, c -> U, ...) agrees with
/// everything, a constant never agrees with an arrow, and two arrows agree
/// unless their domains agree while their codomains do not.
bool consistent(const Ty& a, const Ty& b);

/// consistent(a, a).
bool self_consistent(const Ty& a);

}  // namespace itsub
