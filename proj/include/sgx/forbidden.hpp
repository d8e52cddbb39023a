#pragma once

#include <cstddef>
#include <string>

#include "sgx/signed_graph.hpp"

namespace sgx {

/// What a graph must avoid.
///   TC3 t        : t distinct unbalanced triangles (any overlap)
///   Book t       : t unbalanced triangles on one common edge
///   Friendship t : t unbalanced triangles pairwise meeting only in one hub
///   C3           : a single unbalanced triangle
struct ForbiddenSpec {
    enum class Kind { TC3, Book, Friendship, C3 };
    Kind kind = Kind::TC3;
    std::size_t threshold = 1;

    static ForbiddenSpec tc3(std::size_t t) { return {Kind::TC3, t}; }
    static ForbiddenSpec book(std::size_t t) { return {Kind::Book, t}; }
    static ForbiddenSpec friendship(std::size_t t) { return {Kind::Friendship, t}; }
    static ForbiddenSpec c3() { return {Kind::C3, 1}; }

    std::string str() const;
    friend bool operator==(const ForbiddenSpec&, const ForbiddenSpec&) = default;
};

/// "tc3:4", "book:3", "friendship:2", "c3". Throws GraphError naming the token.
ForbiddenSpec parse_forbidden_spec(const std::string& text);

std::size_t count_unbalanced_triangles(const SignedGraph& g);

struct BookWitness {
    SignedEdge edge;  ///< zero-count graphs report the first edge (or a default edge if m = 0)
    std::size_t count = 0;
};
struct FriendshipWitness {
    Vertex vertex = 0;
    std::size_t count = 0;
};

/// Edge carrying the most unbalanced triangles; ties go to the
/// lexicographically smallest edge.
BookWitness book_count(const SignedGraph& g);

/// Vertex whose link graph (neighbors x, y joined when vxy is an unbalanced
/// triangle) has the largest maximum matching; ties go to the smallest id.
FriendshipWitness friendship_count(const SignedGraph& g);

bool is_forbidden_free(const SignedGraph& g, const ForbiddenSpec& spec);

}  // namespace sgx
