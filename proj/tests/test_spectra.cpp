#include <doctest.h>

#include "oracles.hpp"
#include "sgx/families.hpp"
#include "sgx/spectra.hpp"

using namespace sgx;

namespace {
constexpr Sign P = Sign::Positive, N = Sign::Negative;

void check_values(const Spectrum& s, std::vector<double> expected, double tol = 1e-10) {
    REQUIRE(s.values.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.values[i] == doctest::Approx(expected[i]).epsilon(tol));
}

/// Coefficients of prod (x - lambda_i), lowest degree first.
std::vector<long double> expand(const std::vector<double>& roots) {
    std::vector<long double> c{1};
    for (double r : roots) {
        std::vector<long double> next(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = next;
    }
    return c;
}
}  // namespace

TEST_SUITE("spectra") {
    TEST_CASE("eigenvalues of small matrices") {
        check_values(spectrum(kn_plus(4)), {3, -1, -1, -1});
        check_values(spectrum(SignedGraph(3, {{0, 1, N}, {1, 2, P}, {0, 2, P}})), {1, 1, -2});
        check_values(eigenvalues_symmetric(RealMatrix{{5.0}}), {5});
        CHECK_THROWS_AS(eigenvalues_symmetric(RealMatrix{{0.0, 1.0}, {0.0, 0.0}}), EigenError);
        CHECK_THROWS_AS(eigenvalues_symmetric(RealMatrix(2, 3)), EigenError);
    }

    TEST_CASE("index and spectral radius") {
        CHECK(index(gamma(6, 3)) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(index(kn_plus(6)) == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(std::fabs(index(gamma(6, 6)) - 4.4645) < 1e-3);
        CHECK(spectral_radius(SignedGraph(3, {{0, 1, N}, {1, 2, P}, {0, 2, P}})) == doctest::Approx(2.0));
        CHECK(spectral_radius(kn_plus(6)) == doctest::Approx(5.0));
        CHECK(spectral_radius(SignedGraph(4, {})) == 0.0);
    }

    TEST_CASE("exact characteristic polynomials") {
        CHECK(char_poly(kn_plus(3)) == Polynomial{-2, -3, 0, 1});
        CHECK(char_poly_exact(q2_matrix(9)) == Polynomial{6, 17, -19, -5, 1});
        CHECK(char_poly_exact(IntMatrix(2, 2)) == Polynomial{0, 0, 1});
        CHECK(char_poly_exact(IntMatrix{{7}}) == Polynomial{-7, 1});
        CHECK_THROWS_AS(char_poly_exact(IntMatrix(2, 3)), GraphError);
    }

    TEST_CASE("quotient matrices of the two families") {
        const auto q1 = quotient_matrix(sigma(1, 3, 4).adjacency(), sigma_quotient_partition(10, 4));
        CHECK(q1.equitable);
        REQUIRE(q1.integral());
        CHECK(*q1.integral() == q1_matrix(10, 4));

        const auto q2 = quotient_matrix(u1(9).adjacency(), u1_quotient_partition(9));
        CHECK(q2.equitable);
        REQUIRE(q2.integral());
        CHECK(*q2.integral() == q2_matrix(9));

        Partition singletons{{0}, {1}, {2}, {3}};
        const auto q = quotient_matrix(kn_plus(4).adjacency(), singletons);
        CHECK(q.equitable);
        CHECK(*q.integral() == kn_plus(4).adjacency());
    }

    TEST_CASE("quotient averages and partition validation") {
        // path 0-1-2 with blocks {0,2},{1}: block row sums 1 and 2, equitable
        SignedGraph path(3, {{0, 1, P}, {1, 2, P}});
        const auto q = quotient_matrix(path.adjacency(), {{0, 2}, {1}});
        CHECK(q.equitable);
        CHECK(q.entries(0, 1) == Rational(1));
        CHECK(q.entries(1, 0) == Rational(2));
        // blocks {0,1},{2}: row sums into {0,1} are 1 and 1, into {2} are 0 and 1
        const auto r = quotient_matrix(path.adjacency(), {{0, 1}, {2}});
        CHECK_FALSE(r.equitable);
        CHECK(r.entries(0, 1) == Rational(1, 2));
        CHECK_FALSE(r.integral());
        CHECK_THROWS_AS(quotient_matrix(path.adjacency(), {{0, 1}}), GraphError);
        CHECK_THROWS_AS(quotient_matrix(path.adjacency(), {{0, 1}, {1, 2}}), GraphError);
        CHECK_THROWS_AS(quotient_matrix(path.adjacency(), {{0, 1, 2}, {}}), GraphError);
        CHECK_THROWS_AS(verify_quotient_spectrum(path, {{0, 1}, {2}}), GraphError);
    }

    TEST_CASE("quotient spectrum containment") {
        const auto s = verify_quotient_spectrum(sigma(1, 3, 4), sigma_quotient_partition(10, 4));
        CHECK(s.contained);
        CHECK(s.index_matches);
        CHECK(s.residual.size() == 5);
        for (double v : s.residual) CHECK((std::fabs(v + 1) < 1e-8 || std::fabs(v) < 1e-8));

        const auto u = verify_quotient_spectrum(u1(9), u1_quotient_partition(9));
        CHECK(u.contained);
        CHECK(u.index_matches);
        CHECK(u.residual.size() == 5);
        for (double v : u.residual) CHECK((std::fabs(v + 1) < 1e-8 || std::fabs(v) < 1e-8));

        const auto k = verify_quotient_spectrum(kn_plus(5), {{0}, {1}, {2}, {3}, {4}});
        CHECK(k.contained);
        CHECK(k.residual.empty());
    }

    TEST_CASE("property: quotient index equals graph index for both families") {
        for (std::size_t n = 9; n <= 20; ++n) {
            for (std::size_t t = 3; t + 3 <= n; ++t) {
                const auto c = verify_quotient_spectrum(sigma(1, t - 1, n - t - 2), sigma_quotient_partition(n, t));
                CHECK(c.contained);
                CHECK(c.index_matches);
            }
            const auto c = verify_quotient_spectrum(u1(n), u1_quotient_partition(n));
            CHECK(c.contained);
            CHECK(c.index_matches);
        }
    }

    TEST_CASE("property: exact charpoly matches an independent recurrence and the numeric spectrum") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 120; ++trial) {
            const std::size_t n = 1 + rng() % 12;
            const auto g = oracle::random_graph(rng, n, 0.5, 0.5);
            const Polynomial p = char_poly(g);
            CHECK(p == oracle::charpoly(g.adjacency()));
            CHECK(p.is_monic());
            CHECK(p.degree() == static_cast<int>(n));
            const Spectrum s = spectrum(g);
            CHECK(std::fabs(s.sum()) <= static_cast<double>(n) * 1e-10);
            CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
            const auto numeric = expand(s.values);
            for (std::size_t k = 0; k <= n; ++k) {
                const long double exact = static_cast<long double>(p.coeff(k));
                CHECK(std::fabs(static_cast<double>(numeric[k] - exact)) <= 1e-8 * std::max(1.0L, std::fabs(exact)));
            }
            // every eigenvalue is a root of the exact polynomial
            for (double v : s.values) CHECK(std::fabs(static_cast<double>(p.evaluate(v))) < 1e-6 * std::pow(1 + std::fabs(v), n));
        }
    }

    TEST_CASE("property: switching preserves the exact charpoly") {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 2 + rng() % 9;
            const auto g = oracle::random_graph(rng, n, 0.6, 0.5);
            const auto h = switch_at(g, oracle::random_subset(rng, n));
            CHECK(char_poly(g) == char_poly(h));
            const auto a = spectrum(g).values, b = spectrum(h).values;
            for (std::size_t i = 0; i < n; ++i) CHECK(std::fabs(a[i] - b[i]) < 1e-9);
        }
    }
}
