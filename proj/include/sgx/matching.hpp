#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sgx {

/// Maximum-cardinality matching in a general simple graph given as
/// adjacency lists (Edmonds' blossom algorithm, O(V^3)).
/// Returns mate[v] (or -1 when v is unmatched).
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adj);

std::size_t maximum_matching_size(const std::vector<std::vector<int>>& adj);

}  // namespace sgx
