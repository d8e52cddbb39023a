#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgx/forbidden.hpp"
#include "sgx/signed_graph.hpp"
#include "sgx/switching.hpp"

namespace sgx {

/// Which named construction a graph is switching isomorphic to.
struct ClassificationTag {
    enum class Family { Gamma, Sigma, U1, Other };
    Family family = Family::Other;
    std::vector<std::size_t> params;

    static ClassificationTag gamma(std::size_t n, std::size_t t) { return {Family::Gamma, {n, t}}; }
    static ClassificationTag sigma(std::size_t s, std::size_t t, std::size_t r) { return {Family::Sigma, {s, t, r}}; }
    static ClassificationTag u1(std::size_t n) { return {Family::U1, {n}}; }
    static ClassificationTag other() { return {}; }

    /// "Gamma(9,4)", "Sigma(1,4,3)", "U1(9)", "Other"
    std::string str() const;
    /// The construction named by the tag; throws GraphError for Other.
    SignedGraph build() const;

    friend bool operator==(const ClassificationTag&, const ClassificationTag&) = default;
};

/// "Gamma(9,4)", "Sigma(1,4,3)", "U1(9)" or the family-spec spelling
/// "gamma:9,4", "sigma:1,4,3", "u1:9". Throws GraphError naming the token.
ClassificationTag parse_classification_tag(const std::string& text);

/// Tries gamma(n, t), then sigma(s, t, r) with s >= 1 in ascending s, then
/// u1(n), restricted to candidates with matching edge and unbalanced-triangle
/// counts. Gamma(n, n) doubles as the complete graph with one negative edge.
/// Throws SizeLimitError above `limit` vertices.
ClassificationTag classify(const SignedGraph& g, std::size_t limit = kDefaultIsomorphismLimit);

/// One switching-isomorphism class in a ranked result.
struct ClassEntry {
    double index = 0;
    std::size_t unbalanced_triangles = 0;
    SignedGraph representative;
    std::string canonical;  ///< canonical_code, or the labeled normal form when that is too costly
    ClassificationTag tag;
    std::uint64_t multiplicity = 0;  ///< labeled switching classes (exhaustive) or restarts (local search)
};

struct RestartOutcome {
    std::size_t restart = 0;
    double index = 0;
    std::size_t entry = 0;  ///< position in SearchReport::entries
};

struct SearchReport {
    std::string mode;  ///< "exhaustive" or "local_search"
    std::size_t n = 0;
    ForbiddenSpec spec;
    std::size_t top_k = 0;
    std::vector<ClassEntry> entries;  ///< index descending

    std::uint64_t graphs_visited = 0;
    std::uint64_t classes_visited = 0;

    // local search only
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
    std::vector<ClassificationTag> excluded;
    std::vector<RestartOutcome> restart_outcomes;

    // run-dependent; kept out of the deterministic JSON by default
    double wall_seconds = 0;
    std::uint64_t index_evaluations = 0;
};

inline constexpr std::size_t kMaxEnumerationOrder = 7;
inline constexpr double kClassTieTol = 1e-9;

/// Every labeled underlying graph on n vertices, every switching class of
/// signatures on it (spanning forest fixed positive, residual chords ranging
/// over all sign patterns), filtered to unbalanced and spec-free. Returns the
/// top_k switching-isomorphism classes by index, plus anything tied with the
/// k-th within kClassTieTol. Output does not depend on `workers`.
SearchReport enumerate_extremal(std::size_t n, const ForbiddenSpec& spec, std::size_t top_k,
                                std::size_t workers = 1);

/// One enumeration pass feeding a separate ranking per spec.
std::vector<SearchReport> enumerate_extremal_multi(std::size_t n, const std::vector<ForbiddenSpec>& specs,
                                                   std::size_t top_k, std::size_t workers = 1);

struct LocalSearchOptions {
    std::uint64_t seed = 42;
    std::size_t restarts = 1000;
    std::vector<ClassificationTag> exclude;
    double improve_tol = 1e-10;
    std::size_t max_steps = 10'000;
};

inline constexpr std::size_t kMaxLocalSearchOrder = 64;

/// Steepest-ascent hill climbing over {add +edge, add -edge, delete edge,
/// flip sign}, restarted from seeded random unbalanced spec-free graphs.
/// Graphs switching isomorphic to an excluded class are never incumbents.
SearchReport local_search(std::size_t n, const ForbiddenSpec& spec, const LocalSearchOptions& options);

}  // namespace sgx
