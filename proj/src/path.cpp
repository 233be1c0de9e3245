#include "p2quot/path.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "p2quot/errors.hpp"
#include "p2quot/p1.hpp"
#include "p2quot/smallres.hpp"
#include "p2quot/wall.hpp"

namespace p2quot {

namespace {

Reference make_reference(int n, long long big, int copies, Poly factor) {
    std::vector<Rat> w(static_cast<std::size_t>(n), Rat(1));
    for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] = big;
    Poly p = Poly::one();
    for (int i = 0; i < copies; ++i) p = p * factor;
    Reference ref{Polarization(std::move(w)), std::move(p)};
    if (cone_position(ref.weights).tag != ConePosition::Tag::Chamber)
        throw internal_error("reference weights left their chamber");
    return ref;
}

}  // namespace

Reference reference(int n) {
    if (n < 4) throw std::invalid_argument("no positive-dimensional moduli");
    return make_reference(n, 2 * (n - 4) + 1, n - 4, Poly::projective(2));
}

Reference reference_alt(int n) {
    if (n < 4) throw std::invalid_argument("no positive-dimensional moduli");
    std::vector<Rat> w(static_cast<std::size_t>(n), Rat(1));
    w[0] = w[1] = n - 3;
    Poly side = Poly::projective(n - 4);
    Reference ref{Polarization(std::move(w)), side * side};
    if (cone_position(ref.weights).tag != ConePosition::Tag::Chamber)
        throw internal_error("reference weights left their chamber");
    return ref;
}

CrossingPlan find_crossings(const Polarization& start, const Polarization& end,
                            int max_n) {
    const int n = start.size();
    if (end.size() != n)
        throw std::invalid_argument("endpoints must have the same length");
    check_scan_cap(n, max_n);
    if (cone_position(start, max_n).tag != ConePosition::Tag::Chamber ||
        cone_position(end, max_n).tag != ConePosition::Tag::Chamber)
        throw std::invalid_argument("path endpoints must lie in chambers");

    // Collect, per sign-changing wall subset, the segment parameter where
    // the linear function gamma_c vanishes.
    std::map<Rat, std::vector<Subset>> hits;
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        const int k = std::popcount(mask);
        if (k < 2 || k > n - 3) continue;
        const Rat gs = gamma_c(start, Subset(mask));
        const Rat ge = gamma_c(end, Subset(mask));
        if (sign_of(gs) == 0 || sign_of(ge) == 0)
            throw internal_error("chamber endpoint sits on a wall");
        if (sign_of(gs) == sign_of(ge)) continue;
        hits[gs / (gs - ge)].push_back(Subset(mask));
    }

    CrossingPlan plan{start, end, {}};
    const auto segment_point = [&](const Rat& s) {
        std::vector<Rat> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            w[static_cast<std::size_t>(i)] =
                (1 - s) * start.weight(i + 1) + s * end.weight(i + 1);
        return Polarization(std::move(w));
    };
    const auto require_inside = [&](const Polarization& p) {
        const Rat third = p.total() / 3;
        for (const Rat& w : p.weights())
            if (!(w > 0) || !(w < third))
                throw internal_error("segment left the admissible cone");
    };

    Rat prev = 0;
    for (const auto& [s, subsets] : hits) {
        if (subsets.size() > 1) throw degenerate_path_error("degenerate path");
        const Subset K = subsets.front();

        Crossing c{s, K, coprime_rescale(segment_point(s)),
                   sign_of(gamma_c(end, K))};

        const ConePosition wall_pos = cone_position(c.wall_point, max_n);
        if (wall_pos.tag != ConePosition::Tag::Wall || wall_pos.walls.size() != 1)
            throw degenerate_path_error("degenerate path");
        require_inside(c.wall_point);
        require_inside(segment_point((prev + s) / 2));
        prev = s;
        plan.crossings.push_back(std::move(c));
    }
    if (!plan.crossings.empty())
        require_inside(segment_point((prev + 1) / 2));
    return plan;
}

namespace {

// Signs of gamma_c over every proper nonempty subset: constant exactly on
// the open cells of the chamber decomposition.
std::vector<int> gamma_sign_vector(const Polarization& m) {
    const int n = m.size();
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<int> signs;
    signs.reserve(full - 1);
    for (std::uint32_t mask = 1; mask < full; ++mask)
        signs.push_back(sign_of(gamma_c(m, Subset(mask))));
    return signs;
}

// Scales the point deep into its chamber and nudges each coordinate a
// little; the result is verified to carry the identical sign vector, so the
// segment endpoints move while the chamber combinatorics stay fixed.
Polarization perturb_in_chamber(const Polarization& m, std::mt19937_64& rng) {
    const std::vector<int> signs = gamma_sign_vector(m);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rat> w;
        w.reserve(static_cast<std::size_t>(m.size()));
        for (const Rat& x : m.weights())
            w.push_back(101 * x + (static_cast<int>(rng() % 5) - 2));
        bool positive = true;
        for (const Rat& x : w) positive = positive && x > 0;
        if (!positive) continue;
        Polarization cand(std::move(w));
        if (gamma_sign_vector(cand) == signs) return cand;
    }
    throw internal_error("could not perturb inside the chamber");
}

Poly accumulate(const Reference& ref, const CrossingPlan& plan, int max_n) {
    Poly p = ref.poincare;
    for (const Crossing& c : plan.crossings) {
        const Poly delta = crossing_delta(c.wall_point, c.subset, max_n);
        p += c.direction > 0 ? delta : -delta;
    }
    return p;
}

}  // namespace

Poly chamber_poincare(const Polarization& m, const EngineOptions& opts) {
    const int n = m.size();
    check_scan_cap(n, opts.max_n);
    const Polarization target = coprime_rescale(m);
    if (cone_position(target, opts.max_n).tag != ConePosition::Tag::Chamber)
        throw std::invalid_argument("weights do not lie in a chamber");

    const Reference ref = opts.reference_family == 1   ? reference(n)
                          : opts.reference_family == 2 ? reference_alt(n)
                          : throw std::invalid_argument("unknown reference family");

    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + 0x85EBCA6BULL);
    Poly result;
    bool done = false;
    const int first = opts.force_perturbation ? 1 : 0;
    for (int attempt = first; attempt <= opts.max_retries && !done; ++attempt) {
        const Polarization a =
            attempt == 0 ? ref.weights : perturb_in_chamber(ref.weights, rng);
        const Polarization b =
            attempt == 0 ? target : perturb_in_chamber(target, rng);
        try {
            result = accumulate(ref, find_crossings(a, b, opts.max_n), opts.max_n);
            done = true;
        } catch (const degenerate_path_error&) {
            // next attempt re-perturbs
        }
    }
    if (!done) throw std::runtime_error("could not find generic path");

    bool nonneg = true;
    for (std::int64_t c : result.coeffs()) nonneg = nonneg && c >= 0;
    if (result.coeff(0) != 1 || !result.even_powers_only() ||
        !result.palindromic() || result.degree() != 4 * (n - 4) || !nonneg)
        throw internal_error("chamber polynomial failed its shape checks");
    return result;
}

Poly ip(const Polarization& m, const EngineOptions& opts) {
    const ConePosition pos = cone_position(m, opts.max_n);
    switch (pos.tag) {
        case ConePosition::Tag::EmptyQuotient:
            return Poly::zero();
        case ConePosition::Tag::FaceZero: {
            std::vector<Rat> w;
            for (const Rat& x : m.weights())
                if (x != 0) w.push_back(x);
            return ip(Polarization(std::move(w)), opts);
        }
        case ConePosition::Tag::PointQuotient:
            return Poly::one();
        case ConePosition::Tag::FaceTop: {
            std::vector<Rat> w;
            for (int i = 1; i <= m.size(); ++i)
                if (i != pos.top_index) w.push_back(m.weight(i));
            return p1_ip(Polarization(std::move(w)), opts.max_n);
        }
        case ConePosition::Tag::Wall:
            return chamber_poincare(find_small_resolution(m, opts.max_n), opts);
        default:
            return chamber_poincare(m, opts);
    }
}

}  // namespace p2quot
