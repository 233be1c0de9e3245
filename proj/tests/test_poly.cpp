#include <doctest.h>

#include "p2quot/errors.hpp"
#include "p2quot/poly.hpp"

using namespace p2quot;

TEST_CASE("zero and one") {
    CHECK(Poly::zero().is_zero());
    CHECK(Poly::zero().degree() == -1);
    CHECK(Poly::one().coeff(0) == 1);
    CHECK(Poly::one().degree() == 0);
    CHECK(Poly::zero().str() == "0");
}

TEST_CASE("trailing zeros are trimmed") {
    Poly p({1, 0, 2, 0, 0});
    CHECK(p.degree() == 2);
    CHECK(p == Poly({1, 0, 2}));
    CHECK(Poly(std::vector<std::int64_t>{0, 0}).is_zero());
}

TEST_CASE("monomial and projective") {
    CHECK(Poly::monomial(4) == Poly({0, 0, 0, 0, 1}));
    CHECK(Poly::projective(0) == Poly::one());
    CHECK(Poly::projective(2) == Poly({1, 0, 1, 0, 1}));
    CHECK(Poly::projective(-1).is_zero());
    CHECK_THROWS_AS(Poly::projective(-2), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    Poly a({1, 2, 3});
    Poly b({0, 1});
    CHECK(a + b == Poly({1, 3, 3}));
    CHECK(a - a == Poly::zero());
    CHECK(a * b == Poly({0, 1, 2, 3}));
    CHECK(a * Poly::zero() == Poly::zero());
    CHECK(-b == Poly({0, -1}));
    CHECK(a.scaled(-2) == Poly({-2, -4, -6}));
    CHECK(a.scaled(0) == Poly::zero());
}

TEST_CASE("coeff out of range is zero") {
    Poly p({1, 0, 5});
    CHECK(p.coeff(2) == 5);
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(100) == 0);
}

TEST_CASE("shape predicates") {
    CHECK(Poly({1, 0, 5, 0, 1}).even_powers_only());
    CHECK_FALSE(Poly({1, 1}).even_powers_only());
    CHECK(Poly({1, 0, 5, 0, 1}).palindromic());
    CHECK_FALSE(Poly({1, 0, 5, 0, 2}).palindromic());
    CHECK(Poly::zero().palindromic());
    CHECK(Poly::zero().even_powers_only());
}

TEST_CASE("division by 1 - t^2") {
    // (1 - t^4) / (1 - t^2) = 1 + t^2
    CHECK(Poly({1, 0, 0, 0, -1}).divide_by_one_minus_t2() == Poly({1, 0, 1}));
    // exact multiples round-trip
    Poly q({1, 0, 5, 0, 1});
    Poly divisor({1, 0, -1});
    CHECK((q * divisor).divide_by_one_minus_t2() == q);
    CHECK(Poly::zero().divide_by_one_minus_t2() == Poly::zero());
    // 1 + t is not divisible
    CHECK_THROWS_AS(Poly({1, 1}).divide_by_one_minus_t2(), internal_error);
    CHECK_THROWS_AS(Poly::one().divide_by_one_minus_t2(), internal_error);
}

TEST_CASE("projective space difference identity") {
    // projective(hi) - projective(lo) is the sum of monomials between them
    for (int lo = 0; lo <= 6; ++lo)
        for (int hi = lo; hi <= 8; ++hi) {
            Poly diff = Poly::projective(hi) - Poly::projective(lo);
            Poly expect;
            for (int e = 2 * lo + 2; e <= 2 * hi; e += 2) expect += Poly::monomial(e);
            CHECK(diff == expect);
        }
}

TEST_CASE("pretty printing") {
    CHECK(Poly({1, 0, 5, 0, 1}).str() == "1 + 5t^2 + t^4");
    CHECK(Poly({0, 0, 1}).str() == "t^2");
    CHECK(Poly({-1, 2}).str() == "-1 + 2t");
}
