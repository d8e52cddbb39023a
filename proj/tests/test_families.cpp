#include <doctest.h>

#include "oracles.hpp"
#include "sgx/families.hpp"
#include "sgx/switching.hpp"

using namespace sgx;

namespace {
double root(const Polynomial& p) { return static_cast<double>(largest_real_root(p)); }
}  // namespace

TEST_SUITE("families") {
    TEST_CASE("gamma") {
        const auto g = gamma(6, 3);
        CHECK(g.order() == 6);
        CHECK(g.size() == 12);
        CHECK(oracle::triangles(g) == 1);
        CHECK(g.sign(0, 5) == -1);
        CHECK(g.negative_edge_count() == 1);
        CHECK(g.degree(5) == 2);
        CHECK(index(g) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(gamma(6, 6) == kn_minus(6, {{0, 5}}));
        CHECK(oracle::triangles(gamma(6, 4)) == 2);
        CHECK_THROWS_AS(gamma(6, 2), GraphError);
        CHECK_THROWS_AS(gamma(6, 7), GraphError);
        CHECK_THROWS_AS(gamma(3, 3), GraphError);
    }

    TEST_CASE("sigma") {
        const auto g = sigma(1, 3, 4);
        CHECK(g.order() == 10);
        CHECK(g.degree(0) == 5);
        CHECK(g.degree(1) == 8);
        CHECK_FALSE(g.has_edge(1, 2));
        CHECK(g.sign(0, 1) == -1);
        CHECK(oracle::triangles(g) == 3);
        CHECK(sigma(0, 3, 2).degree(0) == 4);
        CHECK_THROWS_AS(sigma(1, 0, 3), GraphError);
        CHECK_THROWS_AS(sigma(0, 1, 1), GraphError);
    }

    TEST_CASE("u1") {
        const auto g = u1(9);
        CHECK(g.degree(0) == 7);
        CHECK(g.degree(1) == 7);
        CHECK(g.degree(8) == 6);
        CHECK(oracle::triangles(g) == 6);
        CHECK(oracle::triangles(u1(5)) == 2);
        const auto a = g.adjacency();
        std::vector<long long> row;
        for (std::size_t j = 0; j < 9; ++j) row.push_back(a(0, j));
        CHECK(row == std::vector<long long>{0, -1, 1, 1, 1, 1, 1, 1, 0});
        CHECK_THROWS_AS(u1(4), GraphError);
    }

    TEST_CASE("complete graphs") {
        CHECK(is_balanced(kn_minus(4, {})));
        CHECK(kn_minus(4, {}) == kn_plus(4));
        CHECK(oracle::triangles(kn_minus(4, {{0, 1}, {2, 3}})) == 4);
        CHECK(is_switching_isomorphic(kn_minus(6, {{2, 3}}), gamma(6, 6)));
        CHECK_THROWS_AS(kn_minus(4, {{1, 1}}), GraphError);
        CHECK_THROWS_AS(kn_minus(4, {{0, 4}}), GraphError);
    }

    TEST_CASE("closed-form polynomials") {
        CHECK(g_poly(6, 3) == Polynomial{8, -6, -3, 1});
        CHECK(g_poly(10, 4) == Polynomial{23, -11, -7, 1});
        CHECK(g_poly(6, 6) == Polynomial{11, -9, -3, 1});
        CHECK(pq1_poly(9, 4) == Polynomial{24, 52, 2, -22, -4, 1});
        CHECK(pq2_poly(9) == Polynomial{6, 17, -19, -5, 1});
        CHECK(q1_matrix(9, 4) == IntMatrix{{0, -1, 1, 3, 0}, {-1, 0, 0, 3, 3}, {1, 0, 0, 3, 3}, {1, 1, 1, 2, 3}, {0, 1, 1, 3, 2}});
        CHECK(q2_matrix(9) == IntMatrix{{0, -1, 6, 0}, {-1, 0, 6, 0}, {1, 1, 5, 1}, {0, 0, 6, 0}});
        for (long long n = 6; n <= 40; ++n) CHECK(root(g_poly(n, 3)) == doctest::Approx(n - 2).epsilon(1e-12));
    }

    TEST_CASE("quotient identities in exact arithmetic") {
        const Polynomial x1{1, 1};
        for (long long n = 9; n <= 20; ++n) {
            for (long long t = 3; t <= n - 3; ++t) {
                CHECK(char_poly_exact(q1_matrix(n, t)) == pq1_poly(n, t));
                CHECK(x1 * x1 * g_poly(n, t) - pq1_poly(n, t) == q1_remainder(n, t));
            }
        }
        for (long long n = 5; n <= 40; ++n) {
            CHECK(char_poly_exact(q2_matrix(n)) == pq2_poly(n));
            CHECK(x1 * g_poly(n, n - 2) - pq2_poly(n) == q2_remainder(n));
            CHECK(q2_remainder(n) == Polynomial{4 * (n - 4), -4});
        }
        // remainder written out independently: x^3 + (3+4t-3n)x^2 + (5+9t-7n)x + (t-5)(n-t-1)
        CHECK(q1_remainder(12, 5) == Polynomial{0 * 6, 5 + 45 - 84, 3 + 20 - 36, 1});
    }

    TEST_CASE("property: gamma index against the cubic, its bounds and monotonicity") {
        for (std::size_t n = 4; n <= 20; ++n) {
            double prev = 0;
            for (std::size_t t = 3; t <= n; ++t) {
                const double lambda = index(gamma(n, t));
                CHECK(std::fabs(lambda - root(g_poly(static_cast<long long>(n), static_cast<long long>(t)))) <= 1e-8);
                CHECK(lambda >= static_cast<double>(n) - 2 - 1e-9);
                CHECK(lambda < static_cast<double>(n) - 1);
                if (t > 3) CHECK(lambda > prev);
                prev = lambda;
            }
        }
    }

    TEST_CASE("property: triangle counts of every family") {
        for (std::size_t n = 5; n <= 11; ++n) {
            for (std::size_t t = 3; t <= n; ++t) CHECK(oracle::triangles(gamma(n, t)) == t - 2);
            CHECK(oracle::triangles(u1(n)) == n - 3);
            CHECK(oracle::triangles(kn_minus(n, {{1, 2}})) == n - 2);
            for (std::size_t s = 0; s + 3 <= n; ++s)
                for (std::size_t t = 1; s + t + 2 <= n; ++t) {
                    const auto g = sigma(s, t, n - 2 - s - t);
                    CHECK(oracle::triangles(g) == t);
                    CHECK(g.degree(0) == s + t + 1);
                    CHECK(g.degree(1) == n - 1 - s);
                }
        }
    }

    TEST_CASE("property: sigma index equals the largest quotient eigenvalue") {
        for (long long n = 9; n <= 20; ++n)
            for (long long t = 3; t <= n - 3; ++t) {
                const double lambda = index(sigma(1, static_cast<std::size_t>(t - 1), static_cast<std::size_t>(n - t - 2)));
                CHECK(std::fabs(lambda - root(pq1_poly(n, t))) <= 1e-8);
            }
    }

    TEST_CASE("family specs") {
        CHECK(parse_family_spec("gamma:6,3").build() == gamma(6, 3));
        CHECK(parse_family_spec("sigma:1,3,4").build() == sigma(1, 3, 4));
        CHECK(parse_family_spec("u1:9").build() == u1(9));
        CHECK(parse_family_spec("knplus:5").build() == kn_plus(5));
        CHECK(parse_family_spec("knminus:5:0,1;2,3").build() == kn_minus(5, {{0, 1}, {2, 3}}));
        CHECK(parse_family_spec("knminus:4").build() == kn_plus(4));
        CHECK(parse_family_spec("gamma:6,3").str() == "gamma:6,3");
        CHECK_THROWS_WITH_AS(parse_family_spec("delta:3"), doctest::Contains("'delta'"), GraphError);
        CHECK_THROWS_WITH_AS(parse_family_spec("gamma:6,x"), doctest::Contains("'x'"), GraphError);
        CHECK_THROWS_AS(parse_family_spec("gamma:6"), GraphError);
        CHECK_THROWS_AS(parse_family_spec("gamma"), GraphError);
    }
}
