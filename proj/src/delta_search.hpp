#pragma once

#include <cstdlib>
#include <functional>
#include <vector>

namespace p2quot::detail {

// Visits every integer vector delta of length n with sum_i |delta_i| = budget
// and |delta_i| <= limit, in lexicographic order (entries -limit..limit,
// leftmost position most significant). Stops early and returns true as soon
// as the visitor accepts a vector.
inline bool visit_deltas(int n, int budget, int limit, std::vector<int>& delta,
                         const std::function<bool(const std::vector<int>&)>& accept,
                         int pos = 0) {
    if (pos == n) return budget == 0 && accept(delta);
    const int span = budget < limit ? budget : limit;
    for (int v = -span; v <= span; ++v) {
        delta[pos] = v;
        if (visit_deltas(n, budget - std::abs(v), limit, delta, accept, pos + 1))
            return true;
    }
    delta[pos] = 0;
    return false;
}

}  // namespace p2quot::detail
