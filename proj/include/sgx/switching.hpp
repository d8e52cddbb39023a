#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgx/signed_graph.hpp"

namespace sgx {

/// Canonical switching representative of a labeled signed graph.
///
/// A lexicographic BFS forest (lowest id root per component, neighbors in
/// ascending order) is made all-positive by the potentials; the remaining
/// non-forest edges keep the signs of their fundamental cycles. Two
/// signatures on the same underlying graph are switching equivalent iff
/// their residuals agree.
struct NormalForm {
    std::size_t n = 0;
    std::vector<Vertex> parent;     ///< parent[v] == v for component roots
    std::vector<Vertex> component;  ///< root id of v's component
    std::vector<int> potential;     ///< +1/-1; switching at {v : potential[v] < 0} normalizes
    std::vector<SignedEdge> forest;
    std::vector<SignedEdge> residual;

    bool all_positive() const noexcept;
    /// The switched graph: forest edges positive, chords carry residual signs.
    SignedGraph normalized() const;

    friend bool operator==(const NormalForm& a, const NormalForm& b) noexcept {
        return a.n == b.n && a.parent == b.parent && a.forest == b.forest && a.residual == b.residual;
    }
};

NormalForm switching_normal_form(const SignedGraph& g);

/// Both graphs must share vertex count and underlying edge set; otherwise
/// GraphError (use is_switching_isomorphic for unlabeled comparison).
bool is_switching_equivalent(const SignedGraph& g, const SignedGraph& h);

inline constexpr std::size_t kDefaultIsomorphismLimit = 10;

/// True iff a vertex bijection composed with a switching maps g onto h.
///
/// Backtracking over bijections in BFS order, pruned by degree and
/// unbalanced-triangle incidence, with switching potentials propagated along
/// the search tree. Throws SizeLimitError when n exceeds `limit`.
bool is_switching_isomorphic(const SignedGraph& g, const SignedGraph& h,
                             std::size_t limit = kDefaultIsomorphismLimit);

/// Labeling- and switching-independent string code. Equal codes iff the
/// graphs are switching isomorphic. Explores labelings that respect a refined
/// vertex-invariant order; throws SizeLimitError past `max_labelings`.
std::string canonical_code(const SignedGraph& g, std::size_t max_labelings = 5'000'000);

/// Upper-triangle code of a labeled graph: "n:" then one of '0','+','-' per pair.
std::string labeled_code(const SignedGraph& g);

}  // namespace sgx
