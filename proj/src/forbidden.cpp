#include "sgx/forbidden.hpp"

#include <charconv>

#include "sgx/matching.hpp"

namespace sgx {

std::string ForbiddenSpec::str() const {
    switch (kind) {
        case Kind::TC3: return "tc3:" + std::to_string(threshold);
        case Kind::Book: return "book:" + std::to_string(threshold);
        case Kind::Friendship: return "friendship:" + std::to_string(threshold);
        case Kind::C3: return "c3";
    }
    return {};
}

ForbiddenSpec parse_forbidden_spec(const std::string& text) {
    if (text == "c3") return ForbiddenSpec::c3();
    auto colon = text.find(':');
    if (colon == std::string::npos) throw GraphError("forbidden spec '" + text + "': expected kind:t");
    const std::string kind = text.substr(0, colon), num = text.substr(colon + 1);
    std::size_t t = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), t);
    if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || t < 1)
        throw GraphError("forbidden spec '" + text + "': bad threshold '" + num + "'");
    if (kind == "tc3") return ForbiddenSpec::tc3(t);
    if (kind == "book") return ForbiddenSpec::book(t);
    if (kind == "friendship") return ForbiddenSpec::friendship(t);
    throw GraphError("forbidden spec '" + text + "': unknown kind '" + kind + "'");
}

std::size_t count_unbalanced_triangles(const SignedGraph& g) { return unbalanced_triangles(g).size(); }

BookWitness book_count(const SignedGraph& g) {
    BookWitness best;
    if (!g.edges().empty()) best.edge = g.edges().front();
    const auto n = static_cast<Vertex>(g.order());
    for (const auto& e : g.edges()) {
        std::size_t c = 0;
        for (Vertex w = 0; w < n; ++w) {
            int a = g.sign(e.u, w), b = g.sign(e.v, w);
            if (a != 0 && b != 0 && to_int(e.sign) * a * b < 0) ++c;
        }
        if (c > best.count) best = {e, c};
    }
    return best;
}

FriendshipWitness friendship_count(const SignedGraph& g) {
    FriendshipWitness best;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        std::vector<std::vector<int>> link(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int s = g.sign(nb[i], nb[j]);
                if (s != 0 && s * g.sign(v, nb[i]) * g.sign(v, nb[j]) < 0) {
                    link[i].push_back(static_cast<int>(j));
                    link[j].push_back(static_cast<int>(i));
                }
            }
        std::size_t c = maximum_matching_size(link);
        if (c > best.count) best = {v, c};
    }
    return best;
}

bool is_forbidden_free(const SignedGraph& g, const ForbiddenSpec& spec) {
    switch (spec.kind) {
        case ForbiddenSpec::Kind::TC3: return count_unbalanced_triangles(g) < spec.threshold;
        case ForbiddenSpec::Kind::C3: return count_unbalanced_triangles(g) == 0;
        case ForbiddenSpec::Kind::Book: return book_count(g).count < spec.threshold;
        case ForbiddenSpec::Kind::Friendship: return friendship_count(g).count < spec.threshold;
    }
    return false;
}

}  // namespace sgx
