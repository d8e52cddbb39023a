#include "sgx/signed_graph.hpp"

#include <algorithm>
#include <vector>

namespace sgx {

std::string to_string(const SignedEdge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
           (e.sign == Sign::Positive ? "+" : "-") + ")";
}

SignedGraph::SignedGraph(std::size_t n, std::span<const SignedEdge> edges) : n_(n) {
    if (n == 0) throw GraphError("vertex count must be positive");
    table_.assign(n * n, 0);
    edges_.reserve(edges.size());
    for (const auto& raw : edges) {
        if (raw.u >= n || raw.v >= n)
            throw GraphError("edge " + to_string(raw) + ": vertex id out of range for n=" +
                             std::to_string(n));
        if (raw.u == raw.v) throw GraphError("edge " + to_string(raw) + ": self-loop");
        SignedEdge e = raw;
        if (e.u > e.v) std::swap(e.u, e.v);
        if (table_[e.u * n + e.v] != 0) throw GraphError("edge " + to_string(raw) + ": duplicate pair");
        table_[e.u * n + e.v] = table_[e.v * n + e.u] = static_cast<std::int8_t>(to_int(e.sign));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::size_t SignedGraph::degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < n_; ++w) d += table_[v * n_ + w] != 0;
    return d;
}

std::vector<Vertex> SignedGraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < n_; ++w)
        if (table_[v * n_ + w] != 0) out.push_back(static_cast<Vertex>(w));
    return out;
}

std::size_t SignedGraph::negative_edge_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign == Sign::Negative; }));
}

IntMatrix SignedGraph::adjacency() const {
    IntMatrix a(n_, n_);
    for (std::size_t k = 0; k < table_.size(); ++k) a.data()[k] = table_[k];
    return a;
}

RealMatrix SignedGraph::adjacency_real() const {
    RealMatrix a(n_, n_);
    for (std::size_t k = 0; k < table_.size(); ++k) a.data()[k] = table_[k];
    return a;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const noexcept {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (std::size_t k = 0; k < edges_.size(); ++k)
        if (edges_[k].u != other.edges_[k].u || edges_[k].v != other.edges_[k].v) return false;
    return true;
}

SignedGraph SignedGraph::with_edge(Vertex u, Vertex v, Sign s) const {
    std::vector<SignedEdge> es = edges_;
    es.push_back({u, v, s});
    return SignedGraph(n_, es);
}

SignedGraph SignedGraph::without_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    std::vector<SignedEdge> es;
    es.reserve(edges_.size());
    bool found = false;
    for (const auto& e : edges_) {
        if (e.u == u && e.v == v) {
            found = true;
            continue;
        }
        es.push_back(e);
    }
    if (!found) throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return SignedGraph(n_, es);
}

SignedGraph SignedGraph::with_flipped(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    std::vector<SignedEdge> es = edges_;
    for (auto& e : es) {
        if (e.u == u && e.v == v) {
            e.sign = flip(e.sign);
            return SignedGraph(n_, es);
        }
    }
    throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

SignedGraph SignedGraph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw GraphError("permutation length differs from vertex count");
    std::vector<bool> seen(n_, false);
    for (Vertex p : perm) {
        if (p >= n_ || seen[p]) throw GraphError("relabeling is not a permutation");
        seen[p] = true;
    }
    std::vector<SignedEdge> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_) es.push_back({perm[e.u], perm[e.v], e.sign});
    return SignedGraph(n_, es);
}

SignedGraph switch_at(const SignedGraph& g, std::span<const Vertex> set) {
    std::vector<bool> in(g.order(), false);
    for (Vertex v : set) {
        if (v >= g.order()) throw GraphError("switch set vertex " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    std::vector<SignedEdge> es = g.edges();
    for (auto& e : es)
        if (in[e.u] != in[e.v]) e.sign = flip(e.sign);
    return SignedGraph(g.order(), es);
}

bool is_balanced(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<int> theta(n, 0);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (theta[root] != 0) continue;
        theta[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y = 0; y < n; ++y) {
                int s = g.sign(x, y);
                if (s == 0) continue;
                int want = theta[x] * s;
                if (theta[y] == 0) {
                    theta[y] = want;
                    stack.push_back(y);
                } else if (theta[y] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : cycle) {
        if (v >= g.order()) throw GraphError("cycle vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw GraphError("cycle repeats vertex " + std::to_string(v));
        seen[v] = true;
    }
    int product = 1;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        Vertex a = cycle[k], b = cycle[(k + 1) % cycle.size()];
        int s = g.sign(a, b);
        if (s == 0)
            throw GraphError("cycle uses non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        product *= s;
    }
    return product > 0 ? Sign::Positive : Sign::Negative;
}

std::vector<Triple> unbalanced_triangles(const SignedGraph& g) {
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Triple> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            int sab = g.sign(a, b);
            if (sab == 0) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                int sac = g.sign(a, c), sbc = g.sign(b, c);
                if (sac != 0 && sbc != 0 && sab * sac * sbc < 0) out.push_back({a, b, c});
            }
        }
    return out;
}

std::vector<std::size_t> unbalanced_triangle_incidence(const SignedGraph& g) {
    std::vector<std::size_t> inc(g.order(), 0);
    for (const auto& t : unbalanced_triangles(g))
        for (Vertex v : t) ++inc[v];
    return inc;
}

}  // namespace sgx
