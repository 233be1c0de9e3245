#pragma once

#include <cstdint>
#include <vector>

#include "p2quot/poly.hpp"
#include "p2quot/polarization.hpp"
#include "p2quot/stability.hpp"
#include "p2quot/subset.hpp"

namespace p2quot {

struct EngineOptions {
    int max_n = kDefaultMaxN;
    std::uint64_t seed = 0;     // drives endpoint perturbation on retries
    int max_retries = 64;
    int reference_family = 1;   // 1: (s,s,s,s,1,..), 2: (n-3,n-3,1,..)
    bool force_perturbation = false;  // skip the straight segment (testing)
};

struct Reference {
    Polarization weights;
    Poly poincare;
};

// Chambers with known quotients, used as path starting points.
// Family 1: (s,s,s,s,1,...,1) with s = 2(n-4)+1, product of (n-4) planes,
// P = (1+t^2+t^4)^(n-4). Family 2: (n-3,n-3,1,...,1), a product of two
// (n-4)-dimensional projective spaces, P = (1+t^2+...+t^(2(n-4)))^2.
// Requires n >= 4.
Reference reference(int n);
Reference reference_alt(int n);

struct Crossing {
    Rat s;                    // position along the segment, in (0,1)
    Subset subset;            // K of the wall being crossed
    Polarization wall_point;  // segment point rescaled to coprime integers
    int direction = 0;        // sign of gamma_c(end, K)
};

struct CrossingPlan {
    Polarization start;
    Polarization end;
    std::vector<Crossing> crossings;  // strictly increasing s
};

// All walls met by the straight segment between two chamber points. Throws
// degenerate_path_error ("degenerate path") when two walls meet the segment
// at the same point; callers perturb and retry.
CrossingPlan find_crossings(const Polarization& start, const Polarization& end,
                            int max_n = kDefaultMaxN);

// Poincare polynomial of a chamber quotient: the reference value plus the
// signed crossing deltas along a generic path from the reference chamber.
Poly chamber_poincare(const Polarization& m, const EngineOptions& opts = {});

// Intersection Poincare polynomial of the quotient for any admissible
// weights: dispatches on the cone position (empty, zero weights, point,
// top face, wall via a small resolution, chamber).
Poly ip(const Polarization& m, const EngineOptions& opts = {});

}  // namespace p2quot
