#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace p2quot {

// Exact arithmetic throughout: weights are arbitrary-precision rationals,
// so wall membership and chamber sign tests are never subject to rounding.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& x) { return x.sign(); }
inline int sign_of(const Int& x) { return x.sign(); }

}  // namespace p2quot
