#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgx/matrix.hpp"

namespace sgx {

using Vertex = std::uint32_t;

/// Raised when a graph, partition or parameter set violates a precondition.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact-but-exponential routine is asked to exceed its cap.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
    return a == b ? Sign::Positive : Sign::Negative;
}

/// An edge stored with u < v.
struct SignedEdge {
    Vertex u = 0;
    Vertex v = 0;
    Sign sign = Sign::Positive;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// A simple graph on vertices 0..n-1 with a +1/-1 signature.
///
/// Values are immutable after construction; every "modifying" operation
/// returns a new graph. Storage is a dense n x n sign table (0 = no edge)
/// plus the sorted edge list, which is cheap for the orders this toolkit
/// works with (n <= 64 in practice).
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates and builds. Throws GraphError naming the offending edge on a
    /// self-loop, an out-of-range id, or a repeated pair.
    SignedGraph(std::size_t n, std::span<const SignedEdge> edges);
    SignedGraph(std::size_t n, std::initializer_list<SignedEdge> edges)
        : SignedGraph(n, std::span<const SignedEdge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    /// +1, -1, or 0 when u and v are not adjacent.
    int sign(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return table_[u * n_ + v];
    }
    bool has_edge(Vertex u, Vertex v) const { return sign(u, v) != 0; }
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
    std::size_t negative_edge_count() const noexcept;

    /// Signed adjacency matrix: A[u][v] = sigma(uv) for adjacent u, v.
    IntMatrix adjacency() const;
    RealMatrix adjacency_real() const;

    /// Same underlying pairs, ignoring signs.
    bool same_underlying(const SignedGraph& other) const noexcept;

    SignedGraph with_edge(Vertex u, Vertex v, Sign s) const;
    SignedGraph without_edge(Vertex u, Vertex v) const;
    SignedGraph with_flipped(Vertex u, Vertex v) const;
    /// Vertex v of this graph becomes vertex perm[v] of the result.
    SignedGraph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v >= n_) throw GraphError("vertex id " + std::to_string(v) + " out of range");
    }

    std::size_t n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::int8_t> table_;
};

std::string to_string(const SignedEdge& e);

/// Signs of all edges with exactly one endpoint in `set` are reversed.
SignedGraph switch_at(const SignedGraph& g, std::span<const Vertex> set);

/// True iff some potential theta: V -> {+1,-1} satisfies sigma(uv) = theta(u) theta(v).
bool is_balanced(const SignedGraph& g);

/// Product of edge signs along the closed walk cycle[0], cycle[1], ..., cycle[0].
/// Throws GraphError on a repeated vertex, a non-edge, or fewer than 3 vertices.
Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle);

using Triple = std::array<Vertex, 3>;

/// Every vertex triple inducing a triangle whose sign product is -1,
/// each triple ascending and the list sorted lexicographically.
std::vector<Triple> unbalanced_triangles(const SignedGraph& g);

/// Number of unbalanced triangles each vertex lies on.
std::vector<std::size_t> unbalanced_triangle_incidence(const SignedGraph& g);

}  // namespace sgx
