#pragma once

#include <vector>

#include "p2quot/poly.hpp"
#include "p2quot/polarization.hpp"
#include "p2quot/stability.hpp"
#include "p2quot/subset.hpp"

namespace p2quot {

// Weighted configurations of N points on the line, modulo SL2: the quotients
// that appear both over the walls (as Z-strata) and on the top faces of the
// cone. A subset J of the points is "short" when its weight stays strictly
// below half of the total.

struct ShortSubsetFamily {
    std::vector<Rat> weights;     // sorted non-increasing, all positive
    std::vector<Subset> members;  // subsets of {1..N-1}, last index pinned out
};

// Enumerates the J with  w_N + sum_J w_j < sum of the remaining weights,
// J ranging over subsets of {1..N-1}. With include_last_index the literal
// variant is used instead: J ranges over subsets of {1..N} and the right-hand
// sum runs over all i not in J. The two variants disagree already for
// (4,4,4,4,4); the default reproduces the known quotients, the literal form
// is kept for comparison only.
ShortSubsetFamily short_subsets(const Polarization& mp,
                                bool include_last_index = false);

// Closed-form Poincare polynomial of the line-configuration quotient with
// generic weights: sum over the short-subset family of
// t^(2|J|) - t^(2(N-|J|-2)), divided exactly by (1 - t^2).
// Throws on non-generic weights (some subset weighs exactly half the total).
Poly hk_poincare(const Polarization& mp, bool include_last_index = false,
                 int max_n = kDefaultMaxN);

// Intersection Poincare polynomial for arbitrary positive weights, N >= 3.
// Sorts and rescales internally. Degenerate cases: some weight above half
// the total -> empty quotient (zero polynomial); some weight exactly half
// -> single point (1). On a wall of the line problem the result is the
// ordinary Poincare polynomial of the adjacent chamber with minimal fibers
// over every strictly semistable point.
Poly p1_ip(const Polarization& mp, int max_n = kDefaultMaxN);

}  // namespace p2quot
