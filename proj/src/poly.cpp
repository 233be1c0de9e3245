#include "p2quot/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "p2quot/errors.hpp"

namespace p2quot {

Poly::Poly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(int degree, std::int64_t coeff) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (coeff == 0) return Poly();
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::projective(int d) {
    if (d < -1) throw std::invalid_argument("projective space dimension must be >= -1");
    if (d == -1) return Poly();
    std::vector<std::int64_t> c(2 * static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) c[2 * static_cast<std::size_t>(k)] = 1;
    return Poly(std::move(c));
}

std::int64_t Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

bool Poly::even_powers_only() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool Poly::palindromic() const {
    const int d = degree();
    for (int k = 0; 2 * k <= d; ++k)
        if (coeff(k) != coeff(d - k)) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<std::int64_t> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::divide_by_one_minus_t2() const {
    if (is_zero()) return Poly();
    // Long division by (1 - t^2) from the constant term up:
    // q[k] = c[k] + q[k-2].
    std::vector<std::int64_t> q(coeffs_.size(), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        q[k] = coeffs_[k] + (k >= 2 ? q[k - 2] : 0);
    // The true quotient is q[0 .. n-3]; the division is exact exactly when
    // the two top running sums vanish.
    const std::size_t n = coeffs_.size();
    std::int64_t r0 = (n >= 2 ? q[n - 2] : 0);
    std::int64_t r1 = q[n - 1];
    if (r0 != 0 || r1 != 0)
        throw internal_error("division by (1 - t^2) left a remainder");
    q.resize(n >= 2 ? n - 2 : 0);
    return Poly(std::move(q));
}

Poly Poly::scaled(std::int64_t factor) const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c *= factor;
    r.trim();
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || k == 0) out << a;
        if (k == 1) out << "t";
        else if (k >= 2) out << "t^" << k;
    }
    return out.str();
}

}  // namespace p2quot
