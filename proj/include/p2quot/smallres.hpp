#pragma once

#include <vector>

#include "p2quot/polarization.hpp"
#include "p2quot/stability.hpp"
#include "p2quot/subset.hpp"

namespace p2quot {

// Whether the chamber of cand has m in its closure: every strict gamma_c
// sign of m (over all subsets S with 1 <= |S| <= n-1) is reproduced by cand.
// This is what makes the quotient of cand's chamber contract onto the
// categorical quotient of m.
bool stable_sandwich(const Polarization& m, const Polarization& cand,
                     int max_n = kDefaultMaxN);

struct WallCheck {
    Subset wall;                    // K through the target
    int side = 0;                   // sign of gamma_c(cand, K); 0 = still on the wall
    int realized_dim = -1;          // fiber dimension of cand's side
    std::vector<int> required_dims; // dimensions small enough for this wall
    bool ok = false;
};

struct SmallnessReport {
    Polarization target;
    Polarization candidate;
    std::vector<WallCheck> per_wall;
    bool sandwich_ok = false;
    bool chamber_ok = false;
    bool verdict = false;
};

// Checks whether the contraction from cand's chamber onto the categorical
// quotient of m is a small map: the sandwich must hold, cand must sit in a
// chamber, and over every wall stratum the realized fiber dimension must be
// small enough. The target must lie on at least one wall.
SmallnessReport is_small(const Polarization& m, const Polarization& cand,
                         int max_n = kDefaultMaxN);

// Finds a chamber point adjacent to all walls through m whose contraction is
// small, by scaling m and searching integer perturbations outward in l1
// distance with a deterministic tie order. Such a chamber always exists, so
// failure to find one is reported as an error and indicates a bug.
Polarization find_small_resolution(const Polarization& m,
                                   int max_n = kDefaultMaxN);

}  // namespace p2quot
