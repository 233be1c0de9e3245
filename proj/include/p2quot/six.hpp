#pragma once

#include <array>
#include <utility>
#include <vector>

#include "p2quot/poly.hpp"
#include "p2quot/polarization.hpp"

namespace p2quot {

// Closed forms special to six points, used as an independent oracle against
// the wall-crossing pipeline.

// Intersection Poincare polynomial for n = 6 and 0 < m_i < |m|/3, by direct
// case analysis on the sorted weights. Normalizes (sorts) internally.
// Throws "use general ip pipeline" outside that region.
Poly ip_closed_form(const Polarization& m);

// Which of the five closed-form cases applies (1..5), on the same domain.
int six_case(const Polarization& m);

// Number of heavy triples K (sum_K >= 2|m|/3, i.e. the collinearity stratum
// of K is excluded from the stable locus); always 0..4, and equals
// six_case(m) - 1.
int count_excluded_collinear_triples(const Polarization& m);

struct SingularityReport {
    Rat third;  // the common value |m|/3 entering every condition
    // Pairs {i,j} with m_i + m_j = |m|/3: singular curves with local model
    // T1*T4 - T2*T3.
    std::vector<std::pair<int, int>> curves;
    // Partitions {i,j | h,l | k,n} of all six indices into three pairs of
    // equal weight: singular points where three curves meet, local model
    // T1*T2*T3 - T4*T5.
    std::vector<std::array<std::pair<int, int>, 3>> triple_points;
    // Triples {h,i,j} with m_h + m_i + m_j = |m|/3: special but smooth points.
    std::vector<std::array<int, 3>> smooth_points;
};

// Classifies the special points of the categorical quotient for n = 6.
// Requires integral weights (after clearing denominators) with 3 dividing
// the total and every m_i strictly between 0 and |m|/3. Indices refer to
// the weights as given (no sorting).
SingularityReport singularity_report(const Polarization& m);

}  // namespace p2quot
