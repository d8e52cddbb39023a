#include <doctest.h>

#include "oracles.hpp"
#include "sgx/families.hpp"
#include "sgx/switching.hpp"

using namespace sgx;

namespace {
constexpr Sign P = Sign::Positive, N = Sign::Negative;

SignedGraph cycle_graph(std::size_t n, std::vector<std::size_t> negative) {
    std::vector<SignedEdge> e;
    for (std::size_t i = 0; i < n; ++i) {
        Vertex a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % n);
        const bool neg = std::find(negative.begin(), negative.end(), i) != negative.end();
        e.push_back({std::min(a, b), std::max(a, b), neg ? N : P});
    }
    return SignedGraph(n, e);
}
}  // namespace

TEST_SUITE("switching") {
    TEST_CASE("normal form of triangles") {
        const auto one = switching_normal_form(cycle_graph(3, {0}));
        REQUIRE(one.residual.size() == 1);
        CHECK(one.residual[0] == SignedEdge{1, 2, N});
        CHECK(one.forest.size() == 2);
        for (const auto& e : one.forest) CHECK(e.sign == P);
        CHECK(one == switching_normal_form(cycle_graph(3, {0, 1, 2})));
        CHECK_FALSE(one.all_positive());
        CHECK(switching_normal_form(cycle_graph(3, {0, 1})).all_positive());
    }

    TEST_CASE("trees normalize to all positive") {
        SignedGraph tree(5, {{0, 1, N}, {1, 2, N}, {1, 3, P}, {3, 4, N}});
        const auto nf = switching_normal_form(tree);
        CHECK(nf.residual.empty());
        CHECK(nf.all_positive());
        CHECK(nf.normalized() == SignedGraph(5, {{0, 1, P}, {1, 2, P}, {1, 3, P}, {3, 4, P}}));
    }

    TEST_CASE("disconnected graphs get one root per component") {
        SignedGraph g(6, {{0, 1, N}, {1, 2, P}, {0, 2, P}, {4, 5, N}});
        const auto nf = switching_normal_form(g);
        CHECK(nf.component[2] == 0);
        CHECK(nf.component[3] == 3);
        CHECK(nf.component[5] == 4);
        CHECK(nf.parent[4] == 4);
        CHECK(nf.residual.size() == 1);
    }

    TEST_CASE("switching equivalence") {
        CHECK(is_switching_equivalent(cycle_graph(3, {0}), cycle_graph(3, {0, 1, 2})));
        CHECK_FALSE(is_switching_equivalent(cycle_graph(3, {0}), cycle_graph(3, {})));
        CHECK_FALSE(is_switching_equivalent(cycle_graph(4, {0}), cycle_graph(4, {0, 1})));
        CHECK_THROWS_AS(is_switching_equivalent(cycle_graph(4, {0}), kn_plus(4)), GraphError);
    }

    TEST_CASE("switching isomorphism") {
        std::mt19937_64 rng(3);
        const SignedGraph g = gamma(6, 4);
        for (int i = 0; i < 20; ++i) {
            const auto h = switch_at(g.relabeled(oracle::random_permutation(rng, 6)), oracle::random_subset(rng, 6));
            CHECK(is_switching_isomorphic(g, h));
        }
        CHECK_FALSE(is_switching_isomorphic(gamma(6, 4), gamma(6, 5)));
        CHECK_FALSE(is_switching_isomorphic(kn_minus(4, {{0, 1}}), kn_minus(4, {{0, 1}, {2, 3}})));
        CHECK_FALSE(is_switching_isomorphic(kn_plus(4), kn_plus(5)));
        CHECK_THROWS_AS(is_switching_isomorphic(kn_plus(11), kn_plus(11)), SizeLimitError);
        CHECK(is_switching_isomorphic(kn_plus(11), kn_plus(11), 11));
    }

    TEST_CASE("property: normal form agrees with cycle signs") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 3 + rng() % 4;
            const SignedGraph g = oracle::random_graph(rng, n, 0.7, 0.5);
            std::vector<SignedEdge> resigned;
            for (auto e : g.edges()) {
                if (rng() % 3 == 0) e.sign = flip(e.sign);
                resigned.push_back(e);
            }
            const SignedGraph h(n, resigned);
            bool same_cycles = true;
            for (const auto& c : oracle::cycles(g)) same_cycles = same_cycles && cycle_sign(g, c) == cycle_sign(h, c);
            CHECK(is_switching_equivalent(g, h) == same_cycles);
            CHECK(switching_normal_form(g).all_positive() == is_balanced(g));
            CHECK(is_switching_equivalent(g, switching_normal_form(g).normalized()));
        }
    }

    TEST_CASE("property: isomorphism test and canonical code agree with brute force") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 3 + rng() % 4;
            const SignedGraph g = oracle::random_graph(rng, n, 0.6, 0.4);
            SignedGraph h = switch_at(g.relabeled(oracle::random_permutation(rng, n)), oracle::random_subset(rng, n));
            if (rng() % 2 && h.size() > 0) {
                const auto e = h.edges()[rng() % h.size()];
                h = h.with_flipped(e.u, e.v);
            }
            const bool truth = oracle::switching_isomorphic(g, h);
            CHECK(is_switching_isomorphic(g, h) == truth);
            CHECK((canonical_code(g) == canonical_code(h)) == truth);
        }
    }

    TEST_CASE("labeled code") {
        CHECK(labeled_code(cycle_graph(3, {0})) == "3:-++");
        CHECK(labeled_code(SignedGraph(3, {{1, 2, P}})) == "3:00+");
    }
}
