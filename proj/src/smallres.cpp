#include "p2quot/smallres.hpp"

#include <algorithm>
#include <stdexcept>

#include "delta_search.hpp"
#include "p2quot/errors.hpp"
#include "p2quot/wall.hpp"

namespace p2quot {

bool stable_sandwich(const Polarization& m, const Polarization& cand, int max_n) {
    const int n = m.size();
    if (cand.size() != n)
        throw std::invalid_argument("candidate must have the same length");
    check_scan_cap(n, max_n);

    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        const int sm = sign_of(gamma_c(m, Subset(mask)));
        if (sm == 0) continue;
        if (sign_of(gamma_c(cand, Subset(mask))) != sm) return false;
    }
    return true;
}

namespace {

// Fiber dimensions acceptable over a wall stratum K. With f the fiber
// dimension and the stratum of codimension n+|K|-5 in the quotient,
// smallness needs n+|K|-5 > 2f, which admits 2|K|-3 iff 3|K| <= n and
// n-|K|-3 iff 3|K| >= n.
std::vector<int> small_enough_dims(int n, Subset K) {
    std::vector<int> dims;
    const int k3 = 3 * K.size();
    if (k3 <= n) dims.push_back(2 * K.size() - 3);
    if (k3 >= n) {
        const int d = n - K.size() - 3;
        if (dims.empty() || dims.front() != d) dims.push_back(d);
    }
    return dims;
}

}  // namespace

SmallnessReport is_small(const Polarization& m, const Polarization& cand,
                         int max_n) {
    const int n = m.size();
    if (cand.size() != n)
        throw std::invalid_argument("candidate must have the same length");
    const ConePosition target_pos = cone_position(m, max_n);
    if (target_pos.tag != ConePosition::Tag::Wall)
        throw std::invalid_argument("the target does not lie on a wall");

    SmallnessReport rep{m, cand, {}, false, false, false};
    rep.sandwich_ok = stable_sandwich(m, cand, max_n);
    rep.chamber_ok =
        cone_position(cand, max_n).tag == ConePosition::Tag::Chamber;

    bool walls_ok = true;
    for (Subset K : target_pos.walls) {
        WallCheck wc;
        wc.wall = K;
        wc.side = sign_of(gamma_c(cand, K));
        wc.required_dims = small_enough_dims(n, K);
        if (wc.side != 0) {
            wc.realized_dim = side_fiber_dim(n, K, wc.side);
            wc.ok = std::find(wc.required_dims.begin(), wc.required_dims.end(),
                              wc.realized_dim) != wc.required_dims.end();
        }
        walls_ok = walls_ok && wc.ok;
        rep.per_wall.push_back(std::move(wc));
    }
    rep.verdict = rep.sandwich_ok && rep.chamber_ok && walls_ok;

    if (rep.verdict) {
        // Recheck the smallness definition directly: each stratum where the
        // fiber has dimension f >= 1 must have codimension > 2f.
        for (const WallCheck& wc : rep.per_wall) {
            const int codim = n + wc.wall.size() - 5;
            if (wc.realized_dim >= 1 && !(codim > 2 * wc.realized_dim))
                throw internal_error(
                    "smallness verdict contradicts the definition");
        }
    }
    return rep;
}

Polarization find_small_resolution(const Polarization& m, int max_n) {
    const Polarization target = coprime_rescale(m);
    const int n = target.size();
    const ConePosition pos = cone_position(target, max_n);
    if (pos.tag != ConePosition::Tag::Wall)
        throw std::invalid_argument("the target does not lie on a wall");

    // Sign of gamma_c(cand, K) that keeps the fiber over wall K small:
    // -1 or +1 when only one side qualifies, 0 when both do.
    std::vector<int> required;
    for (Subset K : pos.walls) {
        const int k3 = 3 * K.size();
        required.push_back(k3 < n ? -1 : k3 > n ? +1 : 0);
    }

    // On a candidate scale*target + delta, gamma_c of a wall subset reduces
    // to its delta part, so candidates can be screened before the full check.
    const auto wall_value = [&](const std::vector<int>& delta, Subset K) {
        int v = 0;
        for (int i = 0; i < n; ++i)
            v += K.contains(i + 1) ? -2 * delta[static_cast<std::size_t>(i)]
                                   : delta[static_cast<std::size_t>(i)];
        return v;
    };

    struct Stage { int scale; int limit; };
    const Stage stages[] = {{3, 1}, {9, 1}, {9, 2}, {27, 2}, {27, 3}, {81, 3}};
    for (const Stage& stage : stages) {
        Polarization found = target;
        bool ok = false;
        std::vector<int> delta(static_cast<std::size_t>(n), 0);
        for (int budget = 1; budget <= stage.limit * n && !ok; ++budget) {
            detail::visit_deltas(
                n, budget, stage.limit, delta,
                [&](const std::vector<int>& d) {
                    for (std::size_t k = 0; k < required.size(); ++k) {
                        const int v = wall_value(d, pos.walls[k]);
                        if (required[k] == 0 ? v == 0 : v * required[k] <= 0)
                            return false;
                    }
                    std::vector<Rat> w(static_cast<std::size_t>(n));
                    for (int i = 0; i < n; ++i)
                        w[static_cast<std::size_t>(i)] =
                            stage.scale * target.weight(i + 1) +
                            d[static_cast<std::size_t>(i)];
                    Polarization cand(std::move(w));
                    if (!is_small(target, cand, max_n).verdict) return false;
                    found = std::move(cand);
                    ok = true;
                    return true;
                });
        }
        if (ok) return found;
    }
    throw std::runtime_error("no small resolution found");
}

}  // namespace p2quot
