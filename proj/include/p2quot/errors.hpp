#pragma once

#include <stdexcept>
#include <string>

namespace p2quot {

// Raised when a computed quantity violates an identity the model guarantees
// (mismatched cross-checks, impossible case fall-through). Indicates a bug,
// not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Raised by the path engine when a straight segment hits more than one wall
// at the same point (or otherwise cannot be used as-is). The engine retries
// with perturbed endpoints before letting this escape.
class degenerate_path_error : public std::runtime_error {
public:
    explicit degenerate_path_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace p2quot
