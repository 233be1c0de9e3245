#include "p2quot/polarization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace p2quot {

Polarization::Polarization(std::vector<Rat> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("weight vector is empty");
    bool any_positive = false;
    for (const Rat& w : weights_) {
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
        if (w > 0) any_positive = true;
    }
    if (!any_positive) throw std::invalid_argument("weights must not all be zero");
}

Polarization Polarization::from_ints(const std::vector<long long>& weights) {
    std::vector<Rat> w;
    w.reserve(weights.size());
    for (long long v : weights) w.emplace_back(v);
    return Polarization(std::move(w));
}

Rat Polarization::total() const {
    Rat t = 0;
    for (const Rat& w : weights_) t += w;
    return t;
}

Rat Polarization::subset_sum(Subset s) const {
    Rat t = 0;
    for (int i = 1; i <= size(); ++i)
        if (s.contains(i)) t += weights_[static_cast<std::size_t>(i - 1)];
    return t;
}

bool Polarization::all_positive() const {
    return std::all_of(weights_.begin(), weights_.end(),
                       [](const Rat& w) { return w > 0; });
}

bool Polarization::is_integral() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Rat& w) {
        return denominator(w) == 1;
    });
}

bool Polarization::sorted_desc() const {
    return std::is_sorted(weights_.begin(), weights_.end(),
                          [](const Rat& a, const Rat& b) { return a > b; });
}

std::vector<Int> to_coprime_integers(const std::vector<Rat>& w) {
    Int den_lcm = 1;
    for (const Rat& x : w) den_lcm = lcm(den_lcm, Int(denominator(x)));
    std::vector<Int> v;
    v.reserve(w.size());
    Int g = 0;
    for (const Rat& x : w) {
        Int scaled = Int(numerator(x)) * (den_lcm / Int(denominator(x)));
        g = gcd(g, scaled);
        v.push_back(std::move(scaled));
    }
    if (g == 0) throw std::invalid_argument("cannot rescale the zero vector");
    for (Int& x : v) x /= g;
    return v;
}

Polarization coprime_rescale(const Polarization& m) {
    std::vector<Rat> w;
    for (Int& v : to_coprime_integers(m.weights())) w.emplace_back(std::move(v));
    return Polarization(std::move(w));
}

Normalized normalize(const Polarization& m) {
    const int n = m.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return m.weights()[static_cast<std::size_t>(a)] >
               m.weights()[static_cast<std::size_t>(b)];
    });

    std::vector<Rat> sorted;
    sorted.reserve(static_cast<std::size_t>(n));
    for (int p : perm) sorted.push_back(m.weights()[static_cast<std::size_t>(p)]);

    std::vector<Int> coprime = to_coprime_integers(sorted);
    Normalized out;
    out.perm = std::move(perm);
    out.weights.reserve(static_cast<std::size_t>(n));
    for (Int& v : coprime) out.weights.emplace_back(std::move(v));
    // sorted[0] is positive (weights are nonnegative, not all zero), so the
    // ratio below is the common scale for every position.
    out.scale = sorted[0] / out.weights[0];
    return out;
}

}  // namespace p2quot
