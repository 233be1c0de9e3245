#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p2quot/path.hpp"

namespace p2quot {

// Deterministic sampling surveys over integral weight vectors. Every sample
// index owns its own generator stream, so results do not depend on the
// thread count.

struct VerifySixResult {
    std::uint64_t samples = 0;
    std::uint64_t matches = 0;
    std::vector<std::string> mismatches;  // first few offending weight vectors
};

// Draws `samples` random n=6 weight vectors with entries in [1, max_weight]
// and 0 < m_i < |m|/3 (redrawing until the bound holds), then compares the
// path-engine value ip(m) against the closed-form n=6 polynomial. A sample
// matches when the two polynomials are exactly equal.
VerifySixResult verify_six(std::uint64_t samples, int max_weight,
                           std::uint64_t seed, int threads = 0);

struct ChamberSurvey {
    std::uint64_t samples = 0;       // drawn
    std::uint64_t chamber_hits = 0;  // samples that landed inside a chamber
    std::uint64_t distinct = 0;      // distinct chambers discovered
};

// Samples sorted weight vectors with entries in [1, max_weight] and counts
// the distinct chambers hit, where a chamber is identified by the signs of
// gamma_c over all subsets K with 2 <= |K| <= n-3. Sorting first makes the
// count one per permutation class, matching how chambers of the cone are
// usually tallied. Samples on walls or outside the admissible region are
// drawn but not fingerprinted.
ChamberSurvey chamber_survey(int n, std::uint64_t samples, int max_weight,
                             std::uint64_t seed, int threads = 0);

}  // namespace p2quot
