#include "p2quot/p1.hpp"

#include <algorithm>
#include <stdexcept>

#include "delta_search.hpp"
#include "p2quot/errors.hpp"

namespace p2quot {

namespace {

std::vector<Rat> subset_sums(const std::vector<Rat>& w) {
    const std::uint32_t full = (1u << w.size()) - 1u;
    std::vector<Rat> sums(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1u);
        sums[mask] = sums[mask ^ low] +
                     w[static_cast<std::size_t>(std::countr_zero(low))];
    }
    return sums;
}

void require_line_input(const Polarization& mp) {
    if (mp.size() < 3) throw std::invalid_argument("no moduli");
    if (!mp.all_positive())
        throw std::invalid_argument("line-quotient weights must be positive");
    if (!mp.sorted_desc())
        throw std::invalid_argument("line-quotient weights must be sorted non-increasing");
}

}  // namespace

ShortSubsetFamily short_subsets(const Polarization& mp, bool include_last_index) {
    require_line_input(mp);
    const int N = mp.size();
    const Rat total = mp.total();
    const Rat last = mp.weight(N);

    ShortSubsetFamily fam;
    fam.weights = mp.weights();
    const int range = include_last_index ? N : N - 1;
    const std::vector<Rat> sums = subset_sums(mp.weights());
    for (std::uint32_t mask = 0; mask < (1u << range); ++mask) {
        const Rat& sj = sums[mask];  // sums[0] is a default-constructed 0
        // Left side: the pinned last weight plus the weights of J. Right
        // side: everything else (the last weight is outside J by
        // construction in the default reading, and excluded from the right
        // sum there).
        const Rat lhs = last + sj;
        const Rat rhs = include_last_index ? Rat(total - sj) : Rat(total - last - sj);
        if (lhs < rhs) fam.members.emplace_back(mask);
    }
    return fam;
}

Poly hk_poincare(const Polarization& mp, bool include_last_index, int max_n) {
    require_line_input(mp);
    const int N = mp.size();
    check_scan_cap(N, max_n);

    // Generic means no subfamily of points weighs exactly half the total.
    const Rat half = mp.total() / 2;
    const std::vector<Rat> sums = subset_sums(mp.weights());
    const std::uint32_t full = (1u << N) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask)
        if (sums[mask] == half)
            throw std::invalid_argument("strictly semistable P1 configuration");

    Poly acc;
    for (Subset J : short_subsets(mp, include_last_index).members) {
        const int k = J.size();
        const int upper = 2 * (N - k - 2);
        if (upper < 0)
            throw std::invalid_argument(
                "literal short-subset family leaves the formula's exponent range");
        acc += Poly::monomial(2 * k);
        acc -= Poly::monomial(upper);
    }
    Poly p = acc.divide_by_one_minus_t2();

    if (include_last_index) return p;  // comparison variant, no guarantees
    if (p.is_zero()) {
        if (mp.weight(1) < half)
            throw internal_error("line-quotient polynomial vanished on a nonempty quotient");
        return p;
    }
    bool nonneg = true;
    for (std::int64_t c : p.coeffs()) nonneg = nonneg && c >= 0;
    if (p.degree() != 2 * (N - 3) || !p.palindromic() || !p.even_powers_only() ||
        p.coeff(0) != 1 || !nonneg)
        throw internal_error("line-quotient polynomial failed its shape checks");
    return p;
}

namespace {

// Walls of the line problem through integral weights w (sorted, positive,
// all strictly below half): proper subsets J with sum_J = half, represented
// canonically by the side not containing the last index.
struct LineWall {
    std::uint32_t mask;
    int size;
    int required;  // sign of total - 2*sum_J demanded of a perturbation; 0 = either
};

std::vector<LineWall> line_walls(const std::vector<Rat>& w) {
    const int N = static_cast<int>(w.size());
    const Rat half = [&] {
        Rat t = 0;
        for (const Rat& x : w) t += x;
        return Rat(t / 2);  // wrapped: t must not leak through a lazy expression
    }();
    const std::vector<Rat> sums = subset_sums(w);
    std::vector<LineWall> walls;
    for (std::uint32_t mask = 1; mask + 1 < (1u << N); ++mask) {
        if ((mask >> (N - 1)) & 1u) continue;  // keep the side without index N
        if (sums[mask] != half) continue;
        LineWall lw;
        lw.mask = mask;
        lw.size = std::popcount(mask);
        // Over a degenerate point the contraction from the side where part P
        // is short has fiber dimension N - |P| - 2, so minimal fibers come
        // from shorting the larger part.
        if (2 * lw.size < N) lw.required = -1;       // J is the smaller part: keep it long
        else if (2 * lw.size > N) lw.required = +1;  // J is the larger part: keep it short
        else lw.required = 0;
        walls.push_back(lw);
    }
    return walls;
}

int wall_value(const std::vector<int>& delta, std::uint32_t mask) {
    // total(delta) - 2 * sum_J(delta): the value of total - 2*sum_J on the
    // perturbed vector F*w + delta, since the unperturbed part vanishes.
    int v = 0;
    for (std::size_t i = 0; i < delta.size(); ++i)
        v += ((mask >> i) & 1u) ? -delta[i] : delta[i];
    return v;
}

Poly hk_of_perturbed(const std::vector<Rat>& w, const std::vector<int>& delta,
                     int max_n) {
    int l1 = 0;
    for (int d : delta) l1 += std::abs(d);
    const int factor = l1 + 1;
    std::vector<Rat> cand(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) cand[i] = factor * w[i] + delta[i];
    Normalized norm = normalize(Polarization(std::move(cand)));
    return hk_poincare(Polarization(norm.weights), false, max_n);
}

}  // namespace

Poly p1_ip(const Polarization& mp, int max_n) {
    if (mp.size() < 3) throw std::invalid_argument("no moduli");
    if (!mp.all_positive())
        throw std::invalid_argument("line-quotient weights must be positive");
    const int N = mp.size();
    check_scan_cap(N, max_n);

    const std::vector<Rat> w = normalize(mp).weights;  // sorted coprime integers
    Rat total = 0;
    for (const Rat& x : w) total += x;
    const Rat half = total / 2;

    if (w.front() > half) return Poly::zero();  // a forced cluster: empty quotient
    if (w.front() == half) return Poly::one();  // no stable points, single closed orbit

    const std::vector<LineWall> walls = line_walls(w);
    if (walls.empty()) return hk_poincare(Polarization(w), false, max_n);

    // On a wall of the line problem: evaluate the adjacent chamber with
    // minimal fibers. A perturbation F*w + delta with F = |delta|_1 + 1
    // preserves every strict inequality, so only the required wall signs
    // constrain delta.
    const auto matches = [&](const std::vector<int>& delta,
                             const std::vector<int>& required) {
        for (std::size_t k = 0; k < walls.size(); ++k) {
            const int v = wall_value(delta, walls[k].mask);
            if (required[k] == 0 ? v == 0 : v * required[k] <= 0) return false;
        }
        return true;
    };
    const auto search = [&](const std::vector<int>& required,
                            std::vector<int>& found) {
        std::vector<int> delta(static_cast<std::size_t>(N), 0);
        for (int limit = 1; limit <= 3; ++limit)
            for (int budget = 1; budget <= limit * N; ++budget)
                if (detail::visit_deltas(N, budget, limit, delta,
                                         [&](const std::vector<int>& d) {
                                             if (!matches(d, required)) return false;
                                             found = d;
                                             return true;
                                         }))
                    return true;
        return false;
    };

    std::vector<int> required;
    for (const LineWall& lw : walls) required.push_back(lw.required);
    std::vector<int> delta;
    if (!search(required, delta))
        throw internal_error("no generic perturbation found for the line quotient");
    Poly p = hk_of_perturbed(w, delta, max_n);

    // Ties (both parts the same size) may resolve either way; the two sides
    // must agree. Flip every tie to the opposite side and compare when a
    // flipped perturbation exists.
    bool has_tie = false;
    std::vector<int> flipped = required;
    for (std::size_t k = 0; k < walls.size(); ++k) {
        if (walls[k].required != 0) continue;
        has_tie = true;
        flipped[k] = -((wall_value(delta, walls[k].mask) > 0) ? 1 : -1);
    }
    if (has_tie) {
        std::vector<int> delta2;
        if (search(flipped, delta2) && hk_of_perturbed(w, delta2, max_n) != p)
            throw internal_error("tie sides of a line wall disagree");
    }
    return p;
}

}  // namespace p2quot
