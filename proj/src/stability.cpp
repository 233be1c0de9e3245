#include "p2quot/stability.hpp"

#include <stdexcept>

#include "p2quot/errors.hpp"

namespace p2quot {

void check_scan_cap(int n, int max_n) {
    if (n > max_n)
        throw std::invalid_argument(
            "weight count exceeds the subset-scan cap; raise max_n to allow it");
    if (n > 31) throw std::invalid_argument("weight count exceeds bitmask width");
}

const char* to_string(StratumKind k) {
    return k == StratumKind::Coincidence ? "coincidence" : "collinearity";
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::StrictlySemistable: return "strictly-semistable";
        default: return "unstable";
    }
}

const char* to_string(ConePosition::Tag t) {
    switch (t) {
        case ConePosition::Tag::EmptyQuotient: return "empty-quotient";
        case ConePosition::Tag::FaceZero: return "face-zero";
        case ConePosition::Tag::PointQuotient: return "point-quotient";
        case ConePosition::Tag::FaceTop: return "face-top";
        case ConePosition::Tag::Wall: return "wall";
        default: return "chamber";
    }
}

Rat gamma_c(const Polarization& m, Subset K) {
    return m.total() - 3 * m.subset_sum(K);
}

Rat gamma_l(const Polarization& m, Subset J) {
    return 2 * m.total() - 3 * m.subset_sum(J);
}

StratumState subset_state(const Polarization& m, StratumKind kind, Subset S) {
    const Rat third = m.total() / 3;
    for (const Rat& w : m.weights())
        if (w > third)
            throw std::invalid_argument("outside admissible cone region");
    const int min_size = kind == StratumKind::Coincidence ? 2 : 3;
    if (S.size() < min_size)
        throw std::invalid_argument(
            kind == StratumKind::Coincidence
                ? "coincidence strata need at least two indices"
                : "collinearity strata need at least three indices");
    if (!S.indices().empty() && S.indices().back() > m.size())
        throw std::invalid_argument("subset index out of range [1, n]");

    StratumState out;
    out.kind = kind;
    out.subset = S;
    out.gamma = kind == StratumKind::Coincidence ? gamma_c(m, S) : gamma_l(m, S);
    const int sg = sign_of(out.gamma);
    out.state = sg > 0   ? Stability::Stable
                : sg < 0 ? Stability::Unstable
                         : Stability::StrictlySemistable;
    return out;
}

namespace {

// K's with 2 <= |K| <= n-3 and sum_K = |m|/3, i.e. gamma_c(m, K) = 0.
std::vector<Subset> wall_subsets(const Polarization& m) {
    const int n = m.size();
    std::vector<Subset> out;
    if (n < 5) return out;

    // Subset sums by dynamic programming over masks.
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<Rat> sums(static_cast<std::size_t>(full) + 1);
    const Rat third = m.total() / 3;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1u);
        const int i = std::countr_zero(low);
        sums[mask] = sums[mask ^ low] + m.weights()[static_cast<std::size_t>(i)];
        const int size = std::popcount(mask);
        if (size >= 2 && size <= n - 3 && sums[mask] == third)
            out.emplace_back(mask);
    }
    return out;
}

}  // namespace

ConePosition cone_position(const Polarization& m, int max_n) {
    const int n = m.size();
    check_scan_cap(n, max_n);
    const Rat third = m.total() / 3;

    ConePosition out;
    for (const Rat& w : m.weights()) {
        if (w > third) {
            out.tag = ConePosition::Tag::EmptyQuotient;
            return out;
        }
    }
    for (int i = 1; i <= n; ++i)
        if (m.weight(i) == 0) out.zero_indices.push_back(i);
    if (!out.zero_indices.empty()) {
        out.tag = ConePosition::Tag::FaceZero;
        return out;
    }

    std::vector<int> at_third;
    for (int i = 1; i <= n; ++i)
        if (m.weight(i) == third) at_third.push_back(i);
    if (at_third.size() >= 2) {
        out.tag = ConePosition::Tag::PointQuotient;
        return out;
    }
    if (at_third.size() == 1) {
        out.tag = ConePosition::Tag::FaceTop;
        out.top_index = at_third.front();
        return out;
    }

    out.walls = wall_subsets(m);
    out.tag = out.walls.empty() ? ConePosition::Tag::Chamber
                                : ConePosition::Tag::Wall;
    return out;
}

std::vector<ZStratum> z_strata(const Polarization& m, int max_n) {
    const int n = m.size();
    check_scan_cap(n, max_n);
    const Rat third = m.total() / 3;
    for (const Rat& w : m.weights()) {
        if (w > third || w == 0)
            throw std::invalid_argument(
                "z-strata need every weight positive and at most |m|/3");
    }

    std::vector<ZStratum> out;
    for (Subset K : wall_subsets(m)) {
        ZStratum z;
        z.coincident = K;
        z.collinear = K.complement(n);
        z.dim = n - K.size() - 3;
        for (int i = 1; i <= n; ++i)
            if (!K.contains(i)) z.reduced_weights.push_back(m.weight(i));
        if (gamma_c(m, z.coincident) != 0 || gamma_l(m, z.collinear) != 0)
            throw internal_error("z-stratum fails its defining equalities");
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace p2quot
