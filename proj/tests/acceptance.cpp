// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Values are cross-checked against closed forms and hand-computed
// examples; runtimes are wall-clock on the current machine.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "p2quot/p1.hpp"
#include "p2quot/path.hpp"
#include "p2quot/six.hpp"
#include "p2quot/smallres.hpp"
#include "p2quot/survey.hpp"
#include "p2quot/wall.hpp"

using namespace p2quot;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

Polarization ints(std::vector<long long> w) { return Polarization::from_ints(w); }
Subset sub(std::vector<int> idx, int n) { return Subset::from_indices(idx, n); }

double best_of_three_ms(const std::vector<long long>& w) {
    double best = 1e9;
    for (int run = 0; run < 3; ++run) {
        const auto t0 = std::chrono::steady_clock::now();
        const Polarization m = ints(w);
        const std::vector<ZStratum> strata = z_strata(m);
        Poly z = Poly::zero();
        if (strata.size() == 1) z = p1_ip(Polarization(strata[0].reduced_weights));
        const auto t1 = std::chrono::steady_clock::now();
        if (z != Poly({1, 0, 5, 0, 1})) return 1e9;
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void criterion_1() {
    bool ok = true;
    std::string detail;
    const std::vector<ZStratum> strata = z_strata(ints({9, 4, 4, 4, 4, 4, 1}));
    ok = ok && strata.size() == 1;
    if (ok) {
        ok = ok && strata[0].coincident == sub({1, 7}, 7);
        ok = ok && Polarization(strata[0].reduced_weights).weights() ==
                       ints({4, 4, 4, 4, 4}).weights();
        ok = ok && p1_ip(Polarization(strata[0].reduced_weights)) == Poly({1, 0, 5, 0, 1});
    }
    const double ms = best_of_three_ms({9, 4, 4, 4, 4, 4, 1});
    ok = ok && ms < 1.0;
    std::ostringstream out;
    out << "z-stratum {1,7} with line quotient 1+5t^2+t^4 in " << ms << " ms";
    report(1, "z-locus example", ok, out.str());
}

void criterion_2() {
    bool ok = is_small(ints({9, 4, 4, 4, 4, 4, 1}), ints({9, 4, 4, 4, 4, 3, 1})).verdict;
    ok = ok && !is_small(ints({9, 4, 4, 4, 4, 4, 1}), ints({8, 4, 4, 4, 4, 4, 1})).verdict;
    const SmallnessReport rep =
        is_small(ints({19, 16, 7, 7, 6, 2, 2, 1}), ints({19, 16, 7, 6, 6, 2, 1, 1}));
    ok = ok && rep.verdict && rep.per_wall.size() == 3;
    if (rep.per_wall.size() == 3) {
        bool walls_match = false;
        const Subset expected[3] = {sub({1, 8}, 8), sub({2, 6, 7}, 8), sub({3, 4, 5}, 8)};
        for (const Subset& e : expected) {
            walls_match = false;
            for (const WallCheck& wc : rep.per_wall) walls_match = walls_match || wc.wall == e;
            ok = ok && walls_match;
        }
    }
    report(2, "small-map checks", ok,
           "one-sided pair wall plus a three-wall candidate");
}

void criterion_3() {
    bool ok = true;
    for (int n = 5; n <= 8; ++n) {
        std::vector<long long> w(static_cast<std::size_t>(n), 1);
        for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] = 2 * n - 7;
        Poly expected = Poly::one();
        for (int i = 0; i < n - 4; ++i) expected = expected * Poly::projective(2);
        ok = ok && ip(ints(w)) == expected;
    }
    for (int n = 6; n <= 8; ++n) {
        std::vector<long long> w(static_cast<std::size_t>(n), 1);
        w[0] = w[1] = n - 3;
        const Poly side = Poly::projective(n - 4);
        ok = ok && ip(ints(w)) == side * side;
    }
    report(3, "reference quotients", ok,
           "products of planes for n=5..8 and twin projective spaces for n=6..8");
}

void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const VerifySixResult r = verify_six(10000, 30, 7);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.matches == r.samples && r.samples == 10000 && secs < 60.0;
    std::ostringstream out;
    out << r.matches << "/" << r.samples << " oracle matches in " << secs << " s";
    report(4, "six-point oracle equivalence", ok, out.str());
    for (const std::string& mismatch : r.mismatches)
        std::printf("        mismatch %s\n", mismatch.c_str());
}

void criterion_5() {
    const Poly lhs = chamber_poincare(ints({8, 4, 4, 4, 4, 4, 1})) -
                     chamber_poincare(ints({9, 4, 4, 4, 4, 3, 1}));
    const bool ok = lhs == Poly({0, 0, 0, 0, 1, 0, 5, 0, 1});
    report(5, "wall-crossing delta", ok,
           "adjacent seven-point chambers differ by t^4+5t^6+t^8");
}

void criterion_6() {
    bool ok = true;

    // path independence across seeds and both reference families
    const Polarization targets[] = {ints({7, 5, 4, 3, 2, 1}), ints({8, 4, 4, 4, 4, 4, 1})};
    for (const Polarization& m : targets) {
        const Poly expected = chamber_poincare(m);
        for (int family = 1; family <= 2; ++family)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                EngineOptions opts;
                opts.seed = seed;
                opts.reference_family = family;
                opts.force_perturbation = true;
                ok = ok && chamber_poincare(m, opts) == expected;
            }
    }

    // shape of chamber polynomials: even powers, palindromic, degree 4(n-4)
    const std::vector<std::vector<long long>> chambers = {
        {3, 3, 3, 3, 1}, {7, 5, 4, 3, 2, 1}, {4, 4, 4, 2, 1, 1},
        {8, 4, 4, 4, 4, 4, 1}, {9, 9, 9, 9, 1, 1, 1, 1}};
    for (const std::vector<long long>& w : chambers) {
        const Poly p = chamber_poincare(ints(w));
        const int n = static_cast<int>(w.size());
        ok = ok && p.even_powers_only() && p.palindromic() &&
             p.degree() == 4 * (n - 4) && p.coeff(0) == 1;
    }

    // scaling and permutation invariance of the quotient
    ok = ok && ip(ints({7, 5, 4, 3, 2, 1})) == ip(ints({14, 10, 8, 6, 4, 2}));
    ok = ok && ip(ints({7, 5, 4, 3, 2, 1})) == ip(ints({4, 1, 7, 3, 5, 2}));
    ok = ok && ip(ints({9, 4, 4, 4, 4, 4, 1})) == ip(ints({18, 8, 8, 8, 8, 8, 2}));
    ok = ok && ip(ints({9, 4, 4, 4, 4, 4, 1})) == ip(ints({4, 4, 9, 4, 1, 4, 4}));

    // complement identity, exhaustive through n = 10
    for (int n = 3; n <= 10 && ok; ++n) {
        std::vector<long long> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = 1 + (11 * i % 7);
        const Polarization m = ints(w);
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            const Subset S(mask);
            ok = ok && gamma_c(m, S) == -gamma_l(m, S.complement(n));
        }
    }

    // gap polynomial closes the fiber-dimension difference, through n = 12
    for (int n = 5; n <= 12 && ok; ++n)
        for (int k = 2; k <= n - 3; ++k) {
            const Subset K((1u << k) - 1u);
            const Poly diff = Poly::projective(side_fiber_dim(n, K, +1)) -
                              Poly::projective(side_fiber_dim(n, K, -1));
            ok = ok && diff == q_poly(n, K).scaled(epsilon(n, K));
        }

    report(6, "property suites", ok,
           "path independence, shape, invariance, complement and gap identities");
}

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const ChamberSurvey s = chamber_survey(6, 1000000, 30, 20260815);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = s.samples == 1000000 && s.distinct <= 38 && s.chamber_hits > 0;
    std::ostringstream out;
    out << s.distinct << " distinct chambers (bound 38) from " << s.chamber_hits
        << " chamber hits in " << secs << " s";
    report(7, "chamber sampling bound", ok, out.str());
}

void criterion_8() {
    bool ok = true;
    const SingularityReport a = singularity_report(ints({6, 6, 6, 6, 2, 1}));
    ok = ok && a.curves.empty() && a.triple_points.empty() && a.smooth_points.size() == 4;
    if (a.smooth_points.size() == 4) {
        for (int i = 0; i < 4; ++i)
            ok = ok && a.smooth_points[static_cast<std::size_t>(i)] ==
                           std::array<int, 3>{i + 1, 5, 6};
    }
    const SingularityReport b = singularity_report(ints({1, 1, 1, 1, 1, 1}));
    ok = ok && b.curves.size() == 15 && b.triple_points.size() == 15 &&
         b.smooth_points.empty();
    report(8, "singularity classifier", ok,
           "four smooth special points vs fifteen curves and triple points");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
