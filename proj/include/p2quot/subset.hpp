#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace p2quot {

// Index subset of {1, ..., n}, stored as a bitmask (bit i-1 <-> member i).
// Indices are 1-based everywhere the user sees them.
class Subset {
public:
    Subset() = default;
    explicit constexpr Subset(std::uint32_t mask) : mask_(mask) {}

    // Throws std::invalid_argument on indices outside [1, n] or duplicates.
    static Subset from_indices(const std::vector<int>& one_based, int n);

    constexpr std::uint32_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }

    Subset complement(int n) const {
        return Subset((~mask_) & ((n >= 32 ? 0u : (1u << n)) - 1u));
    }

    std::vector<int> indices() const;   // ascending, 1-based
    std::string str() const;            // "{1,7}"

    friend bool operator==(Subset a, Subset b) { return a.mask_ == b.mask_; }
    friend bool operator!=(Subset a, Subset b) { return a.mask_ != b.mask_; }
    friend bool operator<(Subset a, Subset b) { return a.mask_ < b.mask_; }

private:
    std::uint32_t mask_ = 0;
};

}  // namespace p2quot
