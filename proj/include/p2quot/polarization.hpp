#pragma once

#include <vector>

#include "p2quot/numeric.hpp"
#include "p2quot/subset.hpp"

namespace p2quot {

// Weight vector (m_1, ..., m_n) attached to an ordered n-tuple of points in
// the projective plane. Weights must be nonnegative rationals with at least
// one strictly positive; most operations additionally require all weights
// positive and check that themselves.
class Polarization {
public:
    explicit Polarization(std::vector<Rat> weights);
    static Polarization from_ints(const std::vector<long long>& weights);

    int size() const { return static_cast<int>(weights_.size()); }
    const std::vector<Rat>& weights() const { return weights_; }
    const Rat& weight(int i) const { return weights_.at(i - 1); }  // 1-based

    Rat total() const;
    Rat subset_sum(Subset s) const;

    bool all_positive() const;
    bool is_integral() const;
    bool sorted_desc() const;

    friend bool operator==(const Polarization& a, const Polarization& b) {
        return a.weights_ == b.weights_;
    }

private:
    std::vector<Rat> weights_;
};

struct Normalized {
    std::vector<Rat> weights;  // sorted non-increasing, coprime integers
    std::vector<int> perm;     // perm[i] = 0-based input position of weights[i]
    Rat scale;                 // original[perm[i]] == scale * weights[i]
};

// Sort non-increasing (stable, so ties keep input order) and divide out the
// content so the result is a coprime integer vector.
Normalized normalize(const Polarization& m);

// Divide out the content without sorting: smallest positive rational multiple
// of the input that is an integer vector (coprime if the input is nonzero).
std::vector<Int> to_coprime_integers(const std::vector<Rat>& w);

// Convenience: the same, wrapped back into a Polarization.
Polarization coprime_rescale(const Polarization& m);

}  // namespace p2quot
