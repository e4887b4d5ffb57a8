#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "itsub/derivation.hpp"
#include "itsub/types.hpp"

namespace itsub {

/// Evidence that `lhs -> rhs` factors `against`: a witness contained in
/// `against`, with no top codomain part, such that `lhs <: dom(witness)`
/// and `cod(witness) <: rhs`.
struct Factoring {
  Ty witness;
  Derivation dom_premise;
  Derivation cod_premise;
  Ty against;
  Ty lhs;
  Ty rhs;
};

ValidationReport validate_factoring(const Factoring& f);

/// The arrow_prime node `against <: lhs -> rhs` built from a factoring.
Derivation to_arrow_prime(const Factoring& f);

/// Decides `a <: b`, returning a certificate when it holds.
std::optional<Derivation> check_sub(const Ty& a, const Ty& b);

inline bool is_subtype(const Ty& a, const Ty& b) { return check_sub(a, b).has_value(); }

/// Witness search for the arrow rule with `c -> d` on the right. Takes every
/// arrow part of `a` whose domain is above `c` and whose codomain is not top,
/// folded left in parts order. Requires !is_top(d).
std::optional<Factoring> find_factor(const Ty& a, const Ty& c, const Ty& d);

/// Tries every nonempty subset of the arrow parts of `a` (bit i selects the
/// i-th arrow part, subsets in increasing mask order) and returns the first
/// that satisfies all premises. Exponential; meant as a test oracle.
std::optional<Factoring> find_factor_exhaustive(const Ty& a, const Ty& c, const Ty& d);

/// Factorings keyed by the arrow part `C -> D` they were produced for.
using FactoringMap = std::map<Ty, Factoring>;

/// Merges per-part factorings of every arrow part of `a` (each against `b`)
/// into a factoring of `dom(a) -> cod(a)` against `b`.
///
/// Throws std::invalid_argument if `a` has a top codomain part, if dom/cod
/// of `a` are undefined, or if a required part is missing from `per_part`.
Factoring lemma_factor_all(const Ty& a, const Ty& b, const FactoringMap& per_part);

// Certificate builders for the basic properties of `<:`.

/// `a <: a`, by cases on the shape of `a` (arrows with a top codomain use
/// u_arrow, other arrows use arrow_prime with themselves as witness).
Derivation reflexivity(const Ty& a);

/// `b <: a` for any `b`, given top(a). Throws std::invalid_argument otherwise.
Derivation top_below(const Ty& b, const Ty& a);

/// From `a <: b & c`, certificates of `a <: b` and `a <: c`.
std::pair<Derivation, Derivation> split_glb(const Derivation& d);

/// From `a <: b` and `c` a part of `b`, a certificate of `a <: c`.
Derivation project_part(const Derivation& d, const Ty& c);

/// From `a <: b` and `c` contained in `b`, a certificate of `a <: c`.
Derivation project_contained(const Derivation& d, const Ty& c);

/// Inversion for arrows: from `a <: b` with `arrow_part` a part of `b` whose
/// codomain is not top, a factoring of `arrow_part` against `a`.
Factoring invert_arrow(const Derivation& d, const Ty& arrow_part);

#ifdef NDEBUG
inline constexpr bool kCheckMeasureByDefault = false;
#else
inline constexpr bool kCheckMeasureByDefault = true;
#endif

/// Thrown when a recursive composition fails to descend in the measure.
class MeasureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ComposeStats {
  std::uint64_t calls = 0;
  std::uint64_t measure_checks = 0;
};

struct ComposeOptions {
  bool check_measure = kCheckMeasureByDefault;
  ComposeStats* stats = nullptr;
};

/// Composes `a <: b` and `b <: c` into `a <: c`, by cases on the last rule of
/// the second certificate. Both inputs are validated first; mismatched or
/// invalid inputs throw std::invalid_argument.
Derivation trans_compose(const Derivation& d1, const Derivation& d2,
                         const ComposeOptions& options = {});

}  // namespace itsub
