#pragma once

#include "p2quot/poly.hpp"
#include "p2quot/polarization.hpp"
#include "p2quot/stability.hpp"
#include "p2quot/subset.hpp"

namespace p2quot {

// A codimension-1 wall, indexed by its coincident-side subset K, separates
// two chambers. The chamber with gamma_c(m, K) > 0 contracts onto the wall's
// categorical quotient with fibers P^(n-|K|-3) over the strictly semistable
// stratum; the gamma_c < 0 chamber with fibers P^(2|K|-3).

// side is the sign of gamma_c(., K) on the chamber: +1 -> n-|K|-3,
// -1 -> 2|K|-3. Requires 2 <= |K| <= n-3.
int side_fiber_dim(int n, Subset K, int side);

// +1 when |K| < n/3, -1 when |K| > n/3, 0 at |K| = n/3 (fiber dimensions
// coincide and the Betti numbers do not change).
int epsilon(int n, Subset K);

// Gap polynomial between the two side fibers: consecutive even powers of t
// strictly between twice the smaller and twice the larger fiber dimension,
// inclusive on top. Zero when the dimensions agree. Satisfies
// projective(larger) - projective(smaller) = epsilon-signed q_poly.
Poly q_poly(int n, Subset K);

struct WallCrossing {
    Polarization wall_point;  // rescaled to coprime integers
    Subset subset;            // K
    int n = 0;
    int fiber_plus = 0;       // n - |K| - 3
    int fiber_minus = 0;      // 2|K| - 3
    Poly z_poly;              // intersection polynomial of the wall stratum
};

// Requires wall_point to lie on the wall K and on no other wall; throws
// "non-generic wall point" when additional walls pass through it.
WallCrossing analyze_wall(const Polarization& wall_point, Subset K,
                          int max_n = kDefaultMaxN);

// Change of the Poincare polynomial across the wall, oriented from the
// gamma_c < 0 chamber to the gamma_c > 0 chamber:
//   P(gamma_c > 0 side) - P(gamma_c < 0 side) = epsilon * q_poly * z_poly.
Poly crossing_delta(const Polarization& wall_point, Subset K,
                    int max_n = kDefaultMaxN);

}  // namespace p2quot
