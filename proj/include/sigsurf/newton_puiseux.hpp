#pragma once

#include <cstdint>
#include <vector>

#include "sigsurf/curve_invariants.hpp"
#include "sigsurf/polynomial.hpp"

namespace sigsurf {

// Truncated Puiseux parametrization of the branch of g at the origin:
// x = t^ramification, y = sum_k coefficient_k * t^exponent_k (with x and y
// exchanged first when `swapped` is set), truncated after the last
// characteristic term.
struct BranchExpansion {
  struct Term {
    Rational coefficient;
    std::uint64_t exponent;
  };

  bool swapped = false;
  std::uint64_t ramification = 1;
  std::vector<Term> terms;
  PuiseuxPairs pairs;
};

// Iterated Newton polygon / substitution steps restricted to rational roots.
//
// Preconditions: g(0,0) = 0. Order-one (smooth) curves succeed with no
// pairs. Throws Errc::field_extension_required when an edge equation has no
// rational root, Errc::reducible_curve when more than one branch (or a
// repeated branch, or an axis factor) is detected.
BranchExpansion newton_puiseux_lite(const BivariatePoly& g);

PuiseuxPairs puiseux_pairs_lite(const BivariatePoly& g);

}  // namespace sigsurf
