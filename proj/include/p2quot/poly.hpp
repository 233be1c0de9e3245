#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace p2quot {

// Polynomial in t with integer coefficients, dense representation,
// coeffs()[k] is the coefficient of t^k. Invariant: no trailing zeros,
// so the zero polynomial has an empty coefficient vector and degree -1.
//
// Poincare polynomials of the spaces handled here are small (degree a few
// dozen, coefficients far below 2^63), so int64 coefficients are plenty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::int64_t> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({1}); }
    static Poly monomial(int degree, std::int64_t coeff = 1);

    // 1 + t^2 + ... + t^(2d), the Poincare polynomial of d-dimensional
    // projective space; d = -1 gives the zero polynomial (empty space),
    // d = 0 gives 1 (a point). Throws std::invalid_argument for d < -1.
    static Poly projective(int d);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int k) const;

    bool even_powers_only() const;
    // coeff(k) == coeff(d - k) for all k, where d = degree(). Zero counts
    // as palindromic.
    bool palindromic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

    // Exact quotient by (1 - t^2); throws internal_error if the division
    // leaves a remainder, since callers rely on it being exact.
    Poly divide_by_one_minus_t2() const;

    // Scale every coefficient.
    Poly scaled(std::int64_t factor) const;

    std::string str() const;  // e.g. "1 + 5t^2 + t^4", "0"

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

}  // namespace p2quot
