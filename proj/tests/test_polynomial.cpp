#include <doctest.h>

#include "sgx/polynomial.hpp"

using namespace sgx;

TEST_SUITE("polynomial") {
    TEST_CASE("arithmetic") {
        const Polynomial p{-2, -3, 0, 1};  // x^3 - 3x - 2
        CHECK(p.degree() == 3);
        CHECK(p.is_monic());
        CHECK(to_string(p) == "x^3 - 3x - 2");
        CHECK(p == Polynomial::linear_root(2) * Polynomial::linear_root(-1) * Polynomial::linear_root(-1));
        CHECK((p - p).is_zero());
        CHECK((p + Polynomial{2}).coeff(0) == 0);
        CHECK(p * 2 == p + p);
        CHECK(Polynomial::monomial(3, 2) == Polynomial{0, 0, 3});
        CHECK(Polynomial{1, 0, 0} == Polynomial{1});
        CHECK(p.evaluate(2) == doctest::Approx(0));
        CHECK(p.derivative_at(1) == doctest::Approx(0));
    }

    TEST_CASE("formatting") {
        CHECK(to_string(Polynomial{}) == "0");
        CHECK(to_string(Polynomial{0, 0, 1}) == "x^2");
        CHECK(to_string(Polynomial{-1, 1}) == "x - 1");
        CHECK(to_string(Polynomial{0, -1, 0, -2}) == "-2x^3 - x");
    }

    TEST_CASE("largest real root") {
        CHECK(static_cast<double>(largest_real_root(Polynomial{8, -6, -3, 1})) == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(static_cast<double>(largest_real_root(Polynomial{-2, -3, 0, 1})) == doctest::Approx(2.0).epsilon(1e-14));
        // repeated largest root
        const Polynomial sq = Polynomial::linear_root(3) * Polynomial::linear_root(3) * Polynomial::linear_root(-1);
        CHECK(static_cast<double>(largest_real_root(sq)) == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(cauchy_root_bound(Polynomial{8, -6, -3, 1}) >= 4);
        CHECK_THROWS(largest_real_root(Polynomial{5}));
    }
}
