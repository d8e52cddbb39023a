#pragma once

// Bitmask machinery shared by the exhaustive enumerator and the verifiers
// that sweep every switching class of small orders.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sgx/signed_graph.hpp"

namespace sgx::detail {

inline constexpr std::size_t kMaxBitOrder = 7;
using Bits = std::uint32_t;

/// Pair (u, v), u < v, numbered row by row: (0,1), (0,2), ..., (n-2,n-1).
struct PairTable {
    std::size_t n = 0;
    std::size_t pairs = 0;
    std::array<std::uint8_t, 21> u{}, v{};

    explicit PairTable(std::size_t order) : n(order) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                u[pairs] = static_cast<std::uint8_t>(a);
                v[pairs] = static_cast<std::uint8_t>(b);
                ++pairs;
            }
    }
};

/// Labeled underlying graph with its lexicographic BFS forest. Chords are the
/// non-forest edges in pair order; chord i carries bit i of a residual pattern.
struct Underlying {
    std::size_t n = 0;
    Bits mask = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::array<Bits, kMaxBitOrder> adj{};
    std::vector<std::array<std::uint8_t, 2>> chords;

    std::size_t cyclomatic() const { return edges + components - n; }
};

inline void load_adjacency(const PairTable& pt, Bits mask, Underlying& g) {
    g.n = pt.n;
    g.mask = mask;
    g.adj.fill(0);
    for (Bits rest = mask; rest; rest &= rest - 1) {
        int e = std::countr_zero(rest);
        g.adj[pt.u[e]] |= Bits{1} << pt.v[e];
        g.adj[pt.v[e]] |= Bits{1} << pt.u[e];
    }
    g.edges = static_cast<std::size_t>(std::popcount(mask));
}

inline std::size_t count_components(const Underlying& g) {
    const Bits all = (Bits{1} << g.n) - 1;
    Bits seen = 0;
    std::size_t c = 0;
    while (seen != all) {
        Bits frontier = Bits{1} << std::countr_zero(~seen & all);
        Bits comp = frontier;
        while (frontier) {
            Bits next = 0;
            for (Bits f = frontier; f; f &= f - 1) next |= g.adj[std::countr_zero(f)];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        ++c;
    }
    return c;
}

/// Fills `chords` from a BFS that starts at the lowest unvisited id and scans
/// neighbors in ascending order, matching switching_normal_form.
inline void load_forest(const PairTable& pt, Underlying& g) {
    std::array<Bits, kMaxBitOrder> tree{};
    std::array<std::uint8_t, kMaxBitOrder> queue{};
    Bits seen = 0;
    g.components = 0;
    for (std::size_t root = 0; root < g.n; ++root) {
        if (seen >> root & 1) continue;
        ++g.components;
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<std::uint8_t>(root);
        seen |= Bits{1} << root;
        while (head < tail) {
            const std::uint8_t x = queue[head++];
            for (Bits fresh = g.adj[x] & ~seen; fresh; fresh &= fresh - 1) {
                const auto y = static_cast<std::uint8_t>(std::countr_zero(fresh));
                seen |= Bits{1} << y;
                tree[x] |= Bits{1} << y;
                tree[y] |= Bits{1} << x;
                queue[tail++] = y;
            }
        }
    }
    g.chords.clear();
    for (Bits rest = g.mask; rest; rest &= rest - 1) {
        int e = std::countr_zero(rest);
        if (!(tree[pt.u[e]] >> pt.v[e] & 1)) g.chords.push_back({pt.u[e], pt.v[e]});
    }
}

/// Signature state: neg[x] holds the negative neighbors of x.
struct ClassState {
    std::array<Bits, kMaxBitOrder> neg{};
    std::size_t triangles = 0;  ///< unbalanced
    Bits pattern = 0;
};

/// Unbalanced triangles through edge (a, b) given its current sign.
inline Bits unbalanced_apexes(const Underlying& g, const ClassState& s, int a, int b) {
    const Bits common = g.adj[a] & g.adj[b];
    const Bits odd = (s.neg[a] ^ s.neg[b]) & common;
    return (s.neg[a] >> b & 1) ? common & ~odd : odd;
}

/// Visits every non-zero residual pattern in Gray-code order; the all-positive
/// pattern is the balanced class and is skipped.
template <class Visit>
void for_each_unbalanced_class(const Underlying& g, Visit&& visit) {
    ClassState s;
    const std::size_t k = g.chords.size();
    if (k == 0) return;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int c = std::countr_zero(i);
        const int a = g.chords[c][0], b = g.chords[c][1];
        const Bits common = g.adj[a] & g.adj[b];
        const Bits before = unbalanced_apexes(g, s, a, b);
        s.neg[a] ^= Bits{1} << b;
        s.neg[b] ^= Bits{1} << a;
        s.triangles += static_cast<std::size_t>(std::popcount(common)) - 2 * std::popcount(before);
        s.pattern ^= Bits{1} << c;
        visit(s);
    }
}

inline std::size_t book_max(const Underlying& g, const ClassState& s) {
    std::size_t best = 0;
    for (std::size_t a = 0; a < g.n; ++a)
        for (Bits up = g.adj[a] & ~((Bits{2} << a) - 1); up; up &= up - 1) {
            const int b = std::countr_zero(up);
            best = std::max<std::size_t>(best, std::popcount(unbalanced_apexes(g, s, static_cast<int>(a), b)));
        }
    return best;
}

inline std::size_t matching_in(const std::array<Bits, kMaxBitOrder>& link, Bits alive) {
    if (!alive) return 0;
    const int x = std::countr_zero(alive);
    const Bits rest = alive & (alive - 1);
    std::size_t best = matching_in(link, rest);
    for (Bits ys = link[x] & rest; ys; ys &= ys - 1) {
        const int y = std::countr_zero(ys);
        best = std::max(best, 1 + matching_in(link, rest & ~(Bits{1} << y)));
    }
    return best;
}

inline std::size_t friendship_max(const Underlying& g, const ClassState& s) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.n; ++v) {
        std::array<Bits, kMaxBitOrder> link{};
        for (Bits xs = g.adj[v]; xs; xs &= xs - 1) {
            const int x = std::countr_zero(xs);
            const Bits common = g.adj[x] & g.adj[v];
            const Bits odd = (s.neg[v] ^ s.neg[x]) & common;
            link[x] = (s.neg[v] >> x & 1) ? common & ~odd : odd;
        }
        best = std::max(best, matching_in(link, g.adj[v]));
    }
    return best;
}

inline void fill_signed(const Underlying& g, const ClassState& s, double* a) {
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            a[i * g.n + j] = !(g.adj[i] >> j & 1) ? 0.0 : (s.neg[i] >> j & 1) ? -1.0 : 1.0;
}

inline void fill_unsigned(const Underlying& g, double* a) {
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) a[i * g.n + j] = (g.adj[i] >> j & 1) ? 1.0 : 0.0;
}

/// True when theta*I - a is positive definite, i.e. every eigenvalue of the
/// symmetric matrix a lies strictly below theta. Cholesky with early exit.
inline bool all_below(const double* a, std::size_t n, double theta) {
    std::array<double, kMaxBitOrder * kMaxBitOrder> l{};
    for (std::size_t j = 0; j < n; ++j) {
        double d = theta - a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
        if (!(d > 0)) return false;
        d = std::sqrt(d);
        l[j * n + j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            double x = -a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) x -= l[i * n + k] * l[j * n + k];
            l[i * n + j] = x / d;
        }
    }
    return true;
}

/// The labeled class graph: forest edges positive, chord i negative iff bit i.
inline SignedGraph class_graph(const Underlying& g, Bits pattern) {
    std::vector<SignedEdge> edges;
    for (std::size_t a = 0; a < g.n; ++a)
        for (Bits up = g.adj[a] & ~((Bits{2} << a) - 1); up; up &= up - 1)
            edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(std::countr_zero(up)), Sign::Positive});
    for (std::size_t c = 0; c < g.chords.size(); ++c)
        if (pattern >> c & 1)
            for (auto& e : edges)
                if (e.u == g.chords[c][0] && e.v == g.chords[c][1]) e.sign = Sign::Negative;
    return SignedGraph(g.n, edges);
}

}  // namespace sgx::detail
