#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code paths with the library beyond SignedGraph accessors and the
// eigensolver.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "sgx/forbidden.hpp"
#include "sgx/matrix.hpp"
#include "sgx/polynomial.hpp"
#include "sgx/signed_graph.hpp"
#include "sgx/spectra.hpp"

namespace oracle {

using sgx::SignedEdge;
using sgx::SignedGraph;
using sgx::Vertex;

inline std::size_t triangles(const SignedGraph& g) {
    std::size_t c = 0;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex d = b + 1; d < n; ++d)
                if (g.sign(a, b) * g.sign(b, d) * g.sign(a, d) < 0) ++c;
    return c;
}

/// Tries all 2^n potentials.
inline bool balanced(const SignedGraph& g) {
    const std::size_t n = g.order();
    for (std::uint32_t theta = 0; theta < (1u << n); ++theta) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            const int tu = (theta >> e.u & 1) ? -1 : 1, tv = (theta >> e.v & 1) ? -1 : 1;
            if (tu * tv != sgx::to_int(e.sign)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// Maximum matching by trying every edge subset.
inline std::size_t matching(const std::vector<std::pair<int, int>>& edges) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
        std::uint64_t used = 0;
        std::size_t size = 0;
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i)
            if (s >> i & 1) {
                const auto [a, b] = edges[i];
                if ((used >> a & 1) || (used >> b & 1)) ok = false;
                used |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
                ++size;
            }
        if (ok) best = std::max(best, size);
    }
    return best;
}

inline std::size_t book(const SignedGraph& g) {
    std::size_t best = 0;
    const auto n = static_cast<Vertex>(g.order());
    for (const auto& e : g.edges()) {
        std::size_t c = 0;
        for (Vertex w = 0; w < n; ++w)
            if (w != e.u && w != e.v && g.sign(e.u, e.v) * g.sign(e.u, w) * g.sign(e.v, w) < 0) ++c;
        best = std::max(best, c);
    }
    return best;
}

/// Largest set of unbalanced triangles through a common hub that pairwise
/// share only the hub, by exhaustive subset search.
inline std::size_t friendship(const SignedGraph& g) {
    std::size_t best = 0;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> pages;
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y)
                if (x != v && y != v && g.sign(v, x) * g.sign(v, y) * g.sign(x, y) < 0)
                    pages.emplace_back(static_cast<int>(x), static_cast<int>(y));
        if (pages.size() > 20) continue;
        best = std::max(best, matching(pages));
    }
    return best;
}

inline bool free_of(const SignedGraph& g, const sgx::ForbiddenSpec& spec) {
    switch (spec.kind) {
        case sgx::ForbiddenSpec::Kind::TC3: return triangles(g) < spec.threshold;
        case sgx::ForbiddenSpec::Kind::C3: return triangles(g) == 0;
        case sgx::ForbiddenSpec::Kind::Book: return book(g) < spec.threshold;
        case sgx::ForbiddenSpec::Kind::Friendship: return friendship(g) < spec.threshold;
    }
    return false;
}

/// Every relabeling composed with every switching set.
inline bool switching_isomorphic(const SignedGraph& g, const SignedGraph& h) {
    const std::size_t n = g.order();
    if (n != h.order() || g.size() != h.size()) return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::uint32_t sw = 0; sw < (1u << n); ++sw) {
            bool ok = true;
            for (const auto& e : g.edges()) {
                const int flip = ((sw >> e.u ^ sw >> e.v) & 1) ? -1 : 1;
                if (h.sign(perm[e.u], perm[e.v]) != flip * sgx::to_int(e.sign)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Every simple cycle of length >= 3, each listed once (smallest vertex
/// first, second vertex smaller than the last).
inline std::vector<std::vector<Vertex>> cycles(const SignedGraph& g) {
    std::vector<std::vector<Vertex>> out;
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Vertex> path;
    std::vector<bool> on(n, false);
    std::function<void(Vertex, Vertex)> walk = [&](Vertex start, Vertex x) {
        for (Vertex y = start + 1; y < n; ++y) {
            if (!g.has_edge(x, y) || on[y]) continue;
            path.push_back(y);
            on[y] = true;
            if (path.size() >= 3 && g.has_edge(y, start) && path[1] < y) out.push_back(path);
            walk(start, y);
            on[y] = false;
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, false);
        on[s] = true;
        walk(s, s);
    }
    return out;
}

/// Faddeev-LeVerrier over the rationals: c_{n-k} = -tr(A M_k) / k.
inline sgx::Polynomial charpoly(const sgx::IntMatrix& a) {
    using Q = sgx::Rational;
    const std::size_t n = a.rows();
    std::vector<Q> m(n * n, Q(0)), am(n * n);
    std::vector<sgx::BigInt> c(n + 1);
    c[n] = 1;
    Q prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] += prev;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Q s = 0;
                for (std::size_t l = 0; l < n; ++l) s += Q(a(i, l)) * m[l * n + j];
                am[i * n + j] = s;
            }
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
        const Q ck = -tr / Q(static_cast<long long>(k));
        c[n - k] = boost::multiprecision::numerator(ck);
        m = am;
        prev = ck;
    }
    return sgx::Polynomial(c);
}

inline SignedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, double q) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<SignedEdge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (u(rng) < p) edges.push_back({a, b, u(rng) < q ? sgx::Sign::Negative : sgx::Sign::Positive});
    return SignedGraph(n, edges);
}

inline std::vector<Vertex> random_subset(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
        if (rng() & 1) s.push_back(v);
    return s;
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// One naive class: all labeled signed graphs switching isomorphic to `graph`.
struct NaiveClass {
    double index = 0;
    SignedGraph graph;
    std::uint64_t labeled = 0;
};

/// All 3^C(n,2) labeled signed graphs, filtered to unbalanced and spec-free,
/// grouped into switching-isomorphism classes; returns the top_k by index
/// plus anything within 1e-9 of the k-th.
inline std::vector<NaiveClass> enumerate(std::size_t n, const sgx::ForbiddenSpec& spec, std::size_t top_k) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<std::pair<double, SignedGraph>> found;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<SignedEdge> edges;
        std::size_t rest = code;
        for (const auto& [a, b] : pairs) {
            const std::size_t digit = rest % 3;
            rest /= 3;
            if (digit) edges.push_back({a, b, digit == 1 ? sgx::Sign::Positive : sgx::Sign::Negative});
        }
        SignedGraph g(n, edges);
        if (balanced(g) || !free_of(g, spec)) continue;
        const auto values = sgx::eigenvalues_symmetric(g.adjacency_real()).values;
        found.emplace_back(values.front(), std::move(g));
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<NaiveClass> classes;
    for (auto& [lambda, g] : found) {
        if (classes.size() >= top_k && lambda < classes[top_k - 1].index - 1e-9) break;
        bool placed = false;
        for (auto& c : classes)
            if (std::fabs(c.index - lambda) <= 1e-9 && switching_isomorphic(c.graph, g)) {
                ++c.labeled;
                placed = true;
                break;
            }
        if (!placed) classes.push_back({lambda, g, 1});
    }
    return classes;
}

}  // namespace oracle
