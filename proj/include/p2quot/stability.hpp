#pragma once

#include <vector>

#include "p2quot/numeric.hpp"
#include "p2quot/polarization.hpp"
#include "p2quot/subset.hpp"

namespace p2quot {

// Subset scans are exponential in n; operations that need one refuse to run
// past this cap unless the caller raises it explicitly.
inline constexpr int kDefaultMaxN = 16;

void check_scan_cap(int n, int max_n);

enum class StratumKind { Coincidence, Collinearity };
enum class Stability { Stable, StrictlySemistable, Unstable };

const char* to_string(StratumKind k);
const char* to_string(Stability s);

// Linear functionals whose signs classify the degenerate configurations:
// gamma_c(m, K) = |m| - 3*sum_{k in K} m_k   (points of K coincident)
// gamma_l(m, J) = 2|m| - 3*sum_{j in J} m_j  (points of J collinear)
// They satisfy gamma_c(m, S) == -gamma_l(m, complement of S).
Rat gamma_c(const Polarization& m, Subset K);
Rat gamma_l(const Polarization& m, Subset J);

struct StratumState {
    StratumKind kind;
    Subset subset;
    Stability state;
    Rat gamma;
};

// Classifies the stratum (coincidence of S, or collinearity of S) as
// stable / strictly semistable / unstable by the sign of its gamma.
// Requires all m_i <= |m|/3, |S| >= 2 for coincidence, |S| >= 3 for
// collinearity.
StratumState subset_state(const Polarization& m, StratumKind kind, Subset S);

// Where a weight vector sits inside the cone of polarizations.
struct ConePosition {
    enum class Tag {
        EmptyQuotient,   // some m_i > |m|/3: no semistable configurations
        FaceZero,        // some m_i = 0: defer to the quotient without them
        PointQuotient,   // two or more m_i = |m|/3: quotient is a point
        FaceTop,         // exactly one m_i = |m|/3: quotient degenerates to a
                         // weighted configuration space on the line
        Wall,            // some K, 2 <= |K| <= n-3, with sum_K = |m|/3
        Chamber          // generic: geometric quotient
    };

    Tag tag = Tag::Chamber;
    std::vector<int> zero_indices;  // FaceZero payload, 1-based
    int top_index = 0;              // FaceTop payload, 1-based
    std::vector<Subset> walls;      // Wall payload, every such K
};

const char* to_string(ConePosition::Tag t);

ConePosition cone_position(const Polarization& m, int max_n = kDefaultMaxN);

// One stratum of strictly semistable orbits sitting over a wall: the points
// of K coincide and the complementary points are collinear.
struct ZStratum {
    Subset coincident;                 // K
    Subset collinear;                  // complement of K
    int dim = 0;                       // n - |K| - 3
    std::vector<Rat> reduced_weights;  // m with the K positions deleted
};

// All Z-strata of m (empty for a chamber). Requires every weight positive
// and every weight <= |m|/3.
std::vector<ZStratum> z_strata(const Polarization& m, int max_n = kDefaultMaxN);

}  // namespace p2quot
