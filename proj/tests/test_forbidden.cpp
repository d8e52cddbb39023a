#include <doctest.h>

#include "oracles.hpp"
#include "sgx/families.hpp"
#include "sgx/forbidden.hpp"

using namespace sgx;

namespace {
SignedGraph bowtie() {
    // two negative triangles meeting at vertex 0
    return SignedGraph(5, {{0, 1, Sign::Negative}, {0, 2, Sign::Positive}, {1, 2, Sign::Positive},
                           {0, 3, Sign::Negative}, {0, 4, Sign::Positive}, {3, 4, Sign::Positive}});
}
}  // namespace

TEST_SUITE("forbidden") {
    TEST_CASE("spec parsing") {
        CHECK(parse_forbidden_spec("tc3:4") == ForbiddenSpec::tc3(4));
        CHECK(parse_forbidden_spec("book:3") == ForbiddenSpec::book(3));
        CHECK(parse_forbidden_spec("friendship:2") == ForbiddenSpec::friendship(2));
        CHECK(parse_forbidden_spec("c3") == ForbiddenSpec::c3());
        CHECK(parse_forbidden_spec("tc3:4").str() == "tc3:4");
        CHECK(ForbiddenSpec::c3().str() == "c3");
        CHECK_THROWS_WITH_AS(parse_forbidden_spec("tc4:2"), doctest::Contains("tc4"), GraphError);
        CHECK_THROWS_WITH_AS(parse_forbidden_spec("tc3:x"), doctest::Contains("x"), GraphError);
        CHECK_THROWS_AS(parse_forbidden_spec("tc3:0"), GraphError);
        CHECK_THROWS_AS(parse_forbidden_spec("book"), GraphError);
    }

    TEST_CASE("bowtie") {
        const auto g = bowtie();
        CHECK(count_unbalanced_triangles(g) == 2);
        CHECK(book_count(g).count == 1);
        const auto f = friendship_count(g);
        CHECK(f.vertex == 0);
        CHECK(f.count == 2);
        CHECK(is_forbidden_free(g, ForbiddenSpec::tc3(3)));
        CHECK_FALSE(is_forbidden_free(g, ForbiddenSpec::tc3(2)));
        CHECK(is_forbidden_free(g, ForbiddenSpec::book(2)));
        CHECK_FALSE(is_forbidden_free(g, ForbiddenSpec::friendship(2)));
        CHECK_FALSE(is_forbidden_free(g, ForbiddenSpec::c3()));
    }

    TEST_CASE("family witnesses") {
        const auto b = book_count(gamma(6, 4));
        CHECK(b.edge.u == 0);
        CHECK(b.edge.v == 5);
        CHECK(b.count == 2);
        CHECK(friendship_count(gamma(6, 4)).count == 1);
        const auto u = book_count(u1(9));
        CHECK(u.edge.u == 0);
        CHECK(u.edge.v == 1);
        CHECK(u.count == 6);
        CHECK(friendship_count(u1(9)).count == 1);
        CHECK(book_count(kn_plus(5)).count == 0);
        CHECK(book_count(SignedGraph(3, {})).count == 0);
        CHECK(friendship_count(SignedGraph(3, {})).count == 0);
        // K5 with all edges at 0 negative: every triangle through 0 is unbalanced
        const auto star = kn_minus(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        CHECK(count_unbalanced_triangles(star) == 0);
        const auto k5 = kn_minus(5, {{0, 1}, {2, 3}});
        CHECK(count_unbalanced_triangles(k5) == oracle::triangles(k5));
    }

    TEST_CASE("property: counts agree with brute force") {
        std::mt19937_64 rng(7);
        for (int it = 0; it < 400; ++it) {
            const std::size_t n = 3 + rng() % 6;
            const auto g = oracle::random_graph(rng, n, 0.3 + 0.7 * (rng() % 100) / 100.0, 0.5);
            CHECK(count_unbalanced_triangles(g) == oracle::triangles(g));
            CHECK(book_count(g).count == oracle::book(g));
            CHECK(friendship_count(g).count == oracle::friendship(g));
            for (const auto spec : {ForbiddenSpec::tc3(2), ForbiddenSpec::tc3(4), ForbiddenSpec::book(2),
                                    ForbiddenSpec::friendship(2), ForbiddenSpec::c3()})
                CHECK(is_forbidden_free(g, spec) == oracle::free_of(g, spec));
        }
    }

    TEST_CASE("property: witnesses are consistent") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 200; ++it) {
            const std::size_t n = 3 + rng() % 8;
            const auto g = oracle::random_graph(rng, n, 0.8, 0.4);
            const auto b = book_count(g);
            if (b.count == 0) continue;
            CHECK(g.has_edge(b.edge.u, b.edge.v));
            std::size_t pages = 0;
            for (Vertex w = 0; w < n; ++w)
                if (w != b.edge.u && w != b.edge.v &&
                    g.sign(b.edge.u, b.edge.v) * g.sign(b.edge.u, w) * g.sign(b.edge.v, w) < 0)
                    ++pages;
            CHECK(pages == b.count);
            CHECK(friendship_count(g).count >= 1);
            CHECK(friendship_count(g).count <= (n - 1) / 2);
        }
    }
}
