#include "sgx/switching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

namespace sgx {

bool NormalForm::all_positive() const noexcept {
    return std::all_of(residual.begin(), residual.end(),
                       [](const SignedEdge& e) { return e.sign == Sign::Positive; });
}

SignedGraph NormalForm::normalized() const {
    std::vector<SignedEdge> es = forest;
    es.insert(es.end(), residual.begin(), residual.end());
    return SignedGraph(n, es);
}

NormalForm switching_normal_form(const SignedGraph& g) {
    const auto n = static_cast<Vertex>(g.order());
    NormalForm nf;
    nf.n = n;
    nf.parent.assign(n, 0);
    nf.component.assign(n, 0);
    nf.potential.assign(n, 0);

    std::vector<bool> visited(n, false);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        nf.parent[root] = root;
        nf.component[root] = root;
        nf.potential[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y = 0; y < n; ++y) {
                int s = g.sign(x, y);
                if (s == 0 || visited[y]) continue;
                visited[y] = true;
                nf.parent[y] = x;
                nf.component[y] = root;
                nf.potential[y] = nf.potential[x] * s;
                nf.forest.push_back({std::min(x, y), std::max(x, y), Sign::Positive});
                queue.push_back(y);
            }
        }
    }
    std::sort(nf.forest.begin(), nf.forest.end());

    for (const auto& e : g.edges()) {
        if (nf.parent[e.v] == e.u || nf.parent[e.u] == e.v) continue;
        int s = nf.potential[e.u] * nf.potential[e.v] * to_int(e.sign);
        nf.residual.push_back({e.u, e.v, s > 0 ? Sign::Positive : Sign::Negative});
    }
    return nf;
}

bool is_switching_equivalent(const SignedGraph& g, const SignedGraph& h) {
    if (!g.same_underlying(h))
        throw GraphError("switching equivalence needs identical underlying graphs");
    return switching_normal_form(g) == switching_normal_form(h);
}

namespace {

using Invariant = std::pair<std::size_t, std::size_t>;  // degree, unbalanced-triangle incidence

std::vector<Invariant> vertex_invariants(const SignedGraph& g) {
    auto inc = unbalanced_triangle_incidence(g);
    std::vector<Invariant> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = {g.degree(v), inc[v]};
    return out;
}

class IsoSearch {
public:
    IsoSearch(const SignedGraph& g, const SignedGraph& h) : g_(g), h_(h), n_(g.order()) {
        inv_g_ = vertex_invariants(g);
        inv_h_ = vertex_invariants(h);
    }

    bool run() {
        auto a = inv_g_, b = inv_h_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        build_order();
        map_.assign(n_, 0);
        used_.assign(n_, false);
        theta_.assign(n_, 0);
        return extend(0);
    }

private:
    // BFS per component, each component started at its vertex with the
    // rarest invariant so the first branching is as narrow as possible.
    void build_order() {
        std::map<Invariant, std::size_t> freq;
        for (const auto& iv : inv_h_) ++freq[iv];
        std::vector<bool> seen(n_, false);
        anchored_.assign(n_, false);
        while (order_.size() < n_) {
            Vertex start = 0;
            std::size_t best = SIZE_MAX;
            for (Vertex v = 0; v < n_; ++v)
                if (!seen[v] && freq[inv_g_[v]] < best) {
                    best = freq[inv_g_[v]];
                    start = v;
                }
            std::deque<Vertex> queue{start};
            seen[start] = true;
            while (!queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                order_.push_back(x);
                for (Vertex y = 0; y < n_; ++y)
                    if (!seen[y] && g_.has_edge(x, y)) {
                        seen[y] = true;
                        anchored_[y] = true;
                        queue.push_back(y);
                    }
            }
        }
    }

    bool extend(std::size_t depth) {
        if (depth == n_) return true;
        Vertex x = order_[depth];
        for (Vertex y = 0; y < n_; ++y) {
            if (used_[y] || inv_h_[y] != inv_g_[x]) continue;
            int th = anchored_[x] ? 0 : 1;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                Vertex w = order_[k];
                int sg = g_.sign(x, w), sh = h_.sign(y, map_[w]);
                if ((sg == 0) != (sh == 0)) {
                    ok = false;
                } else if (sg != 0) {
                    int want = sg * sh * theta_[w];
                    if (th == 0) th = want;
                    else if (th != want) ok = false;
                }
            }
            if (!ok) continue;
            map_[x] = y;
            used_[y] = true;
            theta_[x] = th;
            if (extend(depth + 1)) return true;
            used_[y] = false;
        }
        return false;
    }

    const SignedGraph& g_;
    const SignedGraph& h_;
    std::size_t n_;
    std::vector<Invariant> inv_g_, inv_h_;
    std::vector<Vertex> order_;
    std::vector<bool> anchored_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<int> theta_;
};

}  // namespace

bool is_switching_isomorphic(const SignedGraph& g, const SignedGraph& h, std::size_t limit) {
    if (g.order() != h.order()) return false;
    if (g.order() > limit)
        throw SizeLimitError("switching isomorphism test limited to n <= " + std::to_string(limit) +
                             " (got n=" + std::to_string(g.order()) + ")");
    if (g.size() != h.size()) return false;
    return IsoSearch(g, h).run();
}

std::string labeled_code(const SignedGraph& g) {
    const auto n = static_cast<Vertex>(g.order());
    std::string code = std::to_string(n) + ":";
    code.reserve(code.size() + n * (n - 1) / 2);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            int s = g.sign(a, b);
            code.push_back(s == 0 ? '0' : (s > 0 ? '+' : '-'));
        }
    return code;
}

std::string canonical_code(const SignedGraph& g, std::size_t max_labelings) {
    const auto n = static_cast<Vertex>(g.order());
    auto base = vertex_invariants(g);
    // One refinement round: append the sorted invariants of the neighborhood.
    using Refined = std::tuple<std::size_t, std::size_t, std::vector<Invariant>>;
    std::vector<Refined> refined(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Invariant> around;
        for (Vertex w : g.neighbors(v)) around.push_back(base[w]);
        std::sort(around.begin(), around.end());
        refined[v] = {base[v].first, base[v].second, std::move(around)};
    }
    std::vector<Vertex> byinv(n);
    std::iota(byinv.begin(), byinv.end(), 0);
    std::stable_sort(byinv.begin(), byinv.end(),
                     [&](Vertex a, Vertex b) { return refined[a] < refined[b]; });

    // Cells of equal refined invariant, as ranges of positions in byinv.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    double labelings = 1;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && refined[byinv[j]] == refined[byinv[i]]) ++j;
        cells.emplace_back(i, j);
        for (std::size_t k = 2; k <= j - i; ++k) labelings *= static_cast<double>(k);
        i = j;
    }
    if (labelings > static_cast<double>(max_labelings))
        throw SizeLimitError("canonical_code: " + std::to_string(static_cast<long double>(labelings)) +
                             " labelings exceed the cap");

    std::string best;
    std::vector<Vertex> perm(n);
    // Odometer over the per-cell permutations.
    std::vector<Vertex> slots = byinv;
    for (auto& [lo, hi] : cells) std::sort(slots.begin() + lo, slots.begin() + hi);
    while (true) {
        for (std::size_t pos = 0; pos < n; ++pos) perm[slots[pos]] = static_cast<Vertex>(pos);
        std::string code = labeled_code(switching_normal_form(g.relabeled(perm)).normalized());
        if (best.empty() || code < best) best = std::move(code);
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto [lo, hi] = cells[c];
            if (std::next_permutation(slots.begin() + lo, slots.begin() + hi)) break;
        }
        if (c == cells.size()) break;
    }
    return best;
}

}  // namespace sgx
