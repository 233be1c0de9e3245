#include "p2quot/six.hpp"

#include <algorithm>
#include <stdexcept>

#include "p2quot/errors.hpp"
#include "p2quot/stability.hpp"

namespace p2quot {

namespace {

std::vector<Rat> sorted_admissible_six(const Polarization& m) {
    if (m.size() != 6)
        throw std::invalid_argument("use general ip pipeline");
    std::vector<Rat> w = normalize(m).weights;
    Rat total = 0;
    for (const Rat& x : w) total += x;
    for (const Rat& x : w)
        if (!(x > 0) || !(x < total / 3))
            throw std::invalid_argument("use general ip pipeline");
    return w;
}

}  // namespace

int six_case(const Polarization& m) {
    const std::vector<Rat> w = sorted_admissible_six(m);
    const Rat b = [&] {
        Rat total = 0;
        for (const Rat& x : w) total += x;
        return Rat(2 * total / 3);  // wrapped: total must not leak through a lazy expression
    }();
    const auto s = [&](int i, int j, int k) -> Rat {
        return w[static_cast<std::size_t>(i - 1)] +
               w[static_cast<std::size_t>(j - 1)] +
               w[static_cast<std::size_t>(k - 1)];
    };

    if (s(1, 2, 3) < b) return 1;
    if (s(1, 2, 3) >= b && s(1, 2, 4) < b) return 2;
    if (s(1, 2, 4) >= b && s(1, 2, 5) < b && s(1, 3, 4) < b) return 3;
    if ((s(1, 2, 5) >= b && s(1, 2, 6) < b) || (s(1, 3, 4) >= b && s(2, 3, 4) < b))
        return 4;
    if (s(1, 2, 6) >= b || s(2, 3, 4) >= b) return 5;
    throw internal_error("six-point case analysis fell through");
}

Poly ip_closed_form(const Polarization& m) {
    const int c = six_case(m);
    return Poly({1, 0, 7 - c, 0, 8 - c, 0, 7 - c, 0, 1});
}

int count_excluded_collinear_triples(const Polarization& m) {
    const std::vector<Rat> w = sorted_admissible_six(m);
    Rat total = 0;
    for (const Rat& x : w) total += x;
    const Rat b = 2 * total / 3;

    std::vector<std::uint32_t> heavy;
    for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
        if (std::popcount(mask) != 3) continue;
        Rat sum = 0;
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1u) sum += w[static_cast<std::size_t>(i)];
        if (sum >= b) heavy.push_back(mask);
    }

    // On sorted weights the excluded triples can only form a prefix of
    // {123, 124, 125, 126} or of {123, 124, 134, 234}; anything else would
    // force a weight above |m|/3.
    const auto mask_of = [](int a, int b2, int c) {
        return (1u << (a - 1)) | (1u << (b2 - 1)) | (1u << (c - 1));
    };
    const std::vector<std::uint32_t> chain_a = {
        mask_of(1, 2, 3), mask_of(1, 2, 4), mask_of(1, 2, 5), mask_of(1, 2, 6)};
    const std::vector<std::uint32_t> chain_b = {
        mask_of(1, 2, 3), mask_of(1, 2, 4), mask_of(1, 3, 4), mask_of(2, 3, 4)};
    const auto within = [&](const std::vector<std::uint32_t>& chain) {
        return std::all_of(heavy.begin(), heavy.end(), [&](std::uint32_t h) {
            return std::find(chain.begin(), chain.end(), h) != chain.end();
        });
    };
    if (!within(chain_a) && !within(chain_b))
        throw internal_error("excluded collinear triples outside both chains");
    return static_cast<int>(heavy.size());
}

SingularityReport singularity_report(const Polarization& m) {
    if (m.size() != 6)
        throw std::invalid_argument("singularity report is specific to n = 6");
    if (!m.is_integral())
        throw std::invalid_argument("singularity report needs integer weights");
    std::vector<Int> w;
    for (const Rat& x : m.weights()) w.push_back(Int(numerator(x)));
    Int total = 0;
    for (const Int& x : w) total += x;
    if (total % 3 != 0)
        throw std::invalid_argument("total weight must be divisible by 3");
    const Int third = total / 3;
    for (const Int& x : w)
        if (!(x > 0) || !(x < third))
            throw std::invalid_argument(
                "weights must be strictly between 0 and |m|/3");

    SingularityReport rep;
    rep.third = Rat(third);
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            if (w[static_cast<std::size_t>(i - 1)] +
                    w[static_cast<std::size_t>(j - 1)] ==
                third)
                rep.curves.emplace_back(i, j);

    // Partitions of {1..6} into three pairs: fix the partner of the lowest
    // remaining index at each step.
    const auto pair_sum = [&](const std::pair<int, int>& p) -> Rat {
        return w[static_cast<std::size_t>(p.first - 1)] +
               w[static_cast<std::size_t>(p.second - 1)];
    };
    for (int a = 2; a <= 6; ++a) {
        std::vector<int> rest;
        for (int i = 2; i <= 6; ++i)
            if (i != a) rest.push_back(i);
        // rest holds four indices; three ways to pair them up.
        const int combos[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& c : combos) {
            std::array<std::pair<int, int>, 3> part = {
                std::make_pair(1, a),
                std::make_pair(rest[static_cast<std::size_t>(c[0])],
                               rest[static_cast<std::size_t>(c[1])]),
                std::make_pair(rest[static_cast<std::size_t>(c[2])],
                               rest[static_cast<std::size_t>(c[3])])};
            if (pair_sum(part[0]) == pair_sum(part[1]) &&
                pair_sum(part[1]) == pair_sum(part[2])) {
                // Equal pair sums across a partition force each to |m|/3,
                // so all three pairs already sit in the curve list.
                for (const auto& p : part)
                    if (std::find(rep.curves.begin(), rep.curves.end(), p) ==
                        rep.curves.end())
                        throw internal_error(
                            "triple point is missing one of its curves");
                rep.triple_points.push_back(part);
            }
        }
    }

    for (int h = 1; h <= 6; ++h)
        for (int i = h + 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                if (w[static_cast<std::size_t>(h - 1)] +
                        w[static_cast<std::size_t>(i - 1)] +
                        w[static_cast<std::size_t>(j - 1)] ==
                    third)
                    rep.smooth_points.push_back({h, i, j});
    return rep;
}

}  // namespace p2quot
