#include "p2quot/subset.hpp"

#include <sstream>
#include <stdexcept>

namespace p2quot {

Subset Subset::from_indices(const std::vector<int>& one_based, int n) {
    if (n < 0 || n > 31) throw std::invalid_argument("subset universe size out of range");
    std::uint32_t mask = 0;
    for (int i : one_based) {
        if (i < 1 || i > n)
            throw std::invalid_argument("subset index out of range [1, n]");
        const std::uint32_t bit = 1u << (i - 1);
        if (mask & bit) throw std::invalid_argument("duplicate subset index");
        mask |= bit;
    }
    return Subset(mask);
}

std::vector<int> Subset::indices() const {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string Subset::str() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i : indices()) {
        if (!first) out << ',';
        out << i;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace p2quot
