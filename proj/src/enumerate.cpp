#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>
#include <tuple>

#include "enum_core.hpp"
#include "sgx/search.hpp"
#include "sgx/spectra.hpp"

namespace sgx {

namespace {

using detail::Bits;

struct Member {
    double index = 0;
    std::size_t triangles = 0;
    Bits mask = 0, pattern = 0;
    std::uint64_t invariant = 0;
    std::uint64_t multiplicity = 1;
    SignedGraph graph;

    auto key() const { return std::tie(mask, pattern); }
};

/// Sorted degrees and unbalanced-triangle incidences, packed 4 bits each.
std::uint64_t class_invariant(const detail::Underlying& g, const detail::ClassState& s) {
    std::array<unsigned, detail::kMaxBitOrder> deg{}, inc{};
    for (std::size_t a = 0; a < g.n; ++a) {
        deg[a] = static_cast<unsigned>(std::popcount(g.adj[a]));
        for (Bits up = g.adj[a] & ~((Bits{2} << a) - 1); up; up &= up - 1) {
            const int b = std::countr_zero(up);
            for (Bits w = detail::unbalanced_apexes(g, s, static_cast<int>(a), b) & ~((Bits{2} << b) - 1); w;
                 w &= w - 1) {
                ++inc[a];
                ++inc[b];
                ++inc[std::countr_zero(w)];
            }
        }
    }
    std::array<unsigned, detail::kMaxBitOrder> pair{};
    for (std::size_t v = 0; v < g.n; ++v) pair[v] = deg[v] << 4 | std::min(inc[v], 15u);
    std::sort(pair.begin(), pair.begin() + static_cast<long>(g.n));
    std::uint64_t h = 0;
    for (std::size_t v = 0; v < g.n; ++v) h = h << 8 | pair[v];
    return h;
}

/// Top-k switching-isomorphism classes, keeping anything tied with the k-th.
class ClassPool {
public:
    explicit ClassPool(std::size_t k) : k_(k) {}

    double threshold() const {
        if (k_ == 0) return std::numeric_limits<double>::infinity();
        if (members_.size() < k_) return -std::numeric_limits<double>::infinity();
        return members_[k_ - 1].index - kClassTieTol;
    }

    template <class MakeGraph>
    void offer(Member m, MakeGraph&& make_graph) {
        for (auto& e : members_) {
            if (std::fabs(e.index - m.index) > kClassTieTol || e.invariant != m.invariant ||
                e.triangles != m.triangles)
                continue;
            if (m.graph.order() == 0) m.graph = make_graph();
            if (!is_switching_isomorphic(e.graph, m.graph, detail::kMaxBitOrder)) continue;
            e.multiplicity += m.multiplicity;
            if (m.key() < e.key()) {
                e.index = m.index;
                e.mask = m.mask;
                e.pattern = m.pattern;
                e.graph = std::move(m.graph);
            }
            return;
        }
        if (m.graph.order() == 0) m.graph = make_graph();
        members_.push_back(std::move(m));
        trim();
    }

    void merge(ClassPool&& other) {
        for (auto& m : other.members_) {
            SignedGraph g = m.graph;
            offer(std::move(m), [&] { return g; });
        }
    }

    const std::vector<Member>& members() const { return members_; }

private:
    void trim() {
        std::sort(members_.begin(), members_.end(), [](const Member& a, const Member& b) {
            if (a.index != b.index) return a.index > b.index;
            return a.key() < b.key();
        });
        if (members_.size() <= k_) return;
        const double cut = members_[k_ - 1].index - kClassTieTol;
        while (members_.back().index < cut) members_.pop_back();
    }

    std::size_t k_;
    std::vector<Member> members_;
};

bool passes(const ForbiddenSpec& spec, const detail::Underlying& g, const detail::ClassState& s,
            std::size_t& book, std::size_t& friendship) {
    constexpr std::size_t unknown = std::numeric_limits<std::size_t>::max();
    switch (spec.kind) {
        case ForbiddenSpec::Kind::TC3: return s.triangles < spec.threshold;
        case ForbiddenSpec::Kind::C3: return s.triangles == 0;
        case ForbiddenSpec::Kind::Book:
            if (s.triangles < spec.threshold) return true;
            if (book == unknown) book = detail::book_max(g, s);
            return book < spec.threshold;
        case ForbiddenSpec::Kind::Friendship:
            if (s.triangles < spec.threshold) return true;
            if (friendship == unknown) friendship = detail::friendship_max(g, s);
            return friendship < spec.threshold;
    }
    return false;
}

struct WorkerResult {
    std::vector<ClassPool> pools;
    std::uint64_t index_evaluations = 0;
};

/// Masks ordered by edge count descending, then by value, so the dense graphs
/// that carry large indices raise the pruning thresholds early.
std::vector<Bits> ordered_masks(std::size_t pairs) {
    std::vector<Bits> order;
    order.reserve(std::size_t{1} << pairs);
    std::vector<std::vector<Bits>> by_count(pairs + 1);
    for (Bits m = 0; m < (Bits{1} << pairs); ++m) by_count[std::popcount(m)].push_back(m);
    for (std::size_t c = pairs + 1; c-- > 0;) order.insert(order.end(), by_count[c].begin(), by_count[c].end());
    return order;
}

constexpr std::size_t kChunk = 1024;

void run_worker(const detail::PairTable& pt, const std::vector<Bits>& masks, std::size_t worker,
                std::size_t workers, const std::vector<ForbiddenSpec>& specs, WorkerResult& out) {
    constexpr std::size_t unknown = std::numeric_limits<std::size_t>::max();
    const std::size_t n = pt.n;
    detail::Underlying g;
    std::array<double, 49> a{}, scratch{};
    std::vector<double> thresholds(specs.size());
    for (std::size_t chunk = worker; chunk * kChunk < masks.size(); chunk += workers) {
        const std::size_t end = std::min(masks.size(), (chunk + 1) * kChunk);
        for (std::size_t i = chunk * kChunk; i < end; ++i) {
            detail::load_adjacency(pt, masks[i], g);
            if (g.edges < 3) continue;
            double floor = std::numeric_limits<double>::infinity();
            for (std::size_t s = 0; s < specs.size(); ++s) {
                thresholds[s] = out.pools[s].threshold();
                floor = std::min(floor, thresholds[s]);
            }
            if (std::isfinite(floor)) {
                // Any signed index is at most the unsigned one.
                const double stanley = (std::sqrt(8.0 * static_cast<double>(g.edges) + 1) - 1) / 2;
                if (stanley < floor - kClassTieTol) continue;
                detail::fill_unsigned(g, a.data());
                if (detail::all_below(a.data(), n, floor - kClassTieTol)) continue;
            }
            detail::load_forest(pt, g);
            detail::for_each_unbalanced_class(g, [&](const detail::ClassState& st) {
                std::size_t book = unknown, friendship = unknown;
                double need = std::numeric_limits<double>::infinity();
                std::uint32_t passing = 0;
                for (std::size_t s = 0; s < specs.size(); ++s)
                    if (passes(specs[s], g, st, book, friendship)) {
                        passing |= 1u << s;
                        need = std::min(need, thresholds[s]);
                    }
                if (!passing) return;
                detail::fill_signed(g, st, a.data());
                if (std::isfinite(need) && detail::all_below(a.data(), n, need - kClassTieTol)) return;
                scratch = a;
                const double lambda = largest_eigenvalue(std::span<double>(scratch.data(), n * n), n);
                ++out.index_evaluations;
                Member m;
                m.index = lambda;
                m.triangles = st.triangles;
                m.mask = g.mask;
                m.pattern = st.pattern;
                bool have_invariant = false;
                for (std::size_t s = 0; s < specs.size(); ++s) {
                    if (!(passing >> s & 1) || lambda < out.pools[s].threshold()) continue;
                    if (!have_invariant) {
                        m.invariant = class_invariant(g, st);
                        have_invariant = true;
                    }
                    out.pools[s].offer(m, [&] { return detail::class_graph(g, st.pattern); });
                    thresholds[s] = out.pools[s].threshold();
                }
            });
        }
    }
}

std::uint64_t count_classes(const detail::PairTable& pt) {
    std::uint64_t total = 0;
    detail::Underlying g;
    for (Bits m = 0; m < (Bits{1} << pt.pairs); ++m) {
        detail::load_adjacency(pt, m, g);
        g.components = detail::count_components(g);
        total += (std::uint64_t{1} << g.cyclomatic()) - 1;
    }
    return total;
}

}  // namespace

std::vector<SearchReport> enumerate_extremal_multi(std::size_t n, const std::vector<ForbiddenSpec>& specs,
                                                   std::size_t top_k, std::size_t workers) {
    if (n == 0) throw GraphError("enumeration needs n >= 1");
    if (n > kMaxEnumerationOrder)
        throw SizeLimitError("exhaustive enumeration limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                             " (got n=" + std::to_string(n) + ")");
    if (specs.empty() || specs.size() > 32) throw GraphError("enumeration needs between 1 and 32 forbidden specs");
    if (workers == 0) throw GraphError("worker count must be at least 1");
    const auto start = std::chrono::steady_clock::now();

    const detail::PairTable pt(n);
    const auto masks = ordered_masks(pt.pairs);
    workers = std::min(workers, std::max<std::size_t>(1, (masks.size() + kChunk - 1) / kChunk));
    std::vector<WorkerResult> results(workers);
    for (auto& r : results) r.pools.assign(specs.size(), ClassPool(top_k));
    if (workers == 1) {
        run_worker(pt, masks, 0, 1, specs, results[0]);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(run_worker, std::cref(pt), std::cref(masks), w, workers, std::cref(specs),
                                 std::ref(results[w]));
        for (auto& t : threads) t.join();
    }
    std::uint64_t evaluations = 0;
    for (auto& r : results) evaluations += r.index_evaluations;
    for (std::size_t w = 1; w < workers; ++w)
        for (std::size_t s = 0; s < specs.size(); ++s) results[0].pools[s].merge(std::move(results[w].pools[s]));

    const std::uint64_t classes = count_classes(pt);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<SearchReport> reports;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        SearchReport r;
        r.mode = "exhaustive";
        r.n = n;
        r.spec = specs[s];
        r.top_k = top_k;
        r.graphs_visited = std::uint64_t{1} << pt.pairs;
        r.classes_visited = classes;
        r.wall_seconds = seconds;
        r.index_evaluations = evaluations;
        for (const auto& m : results[0].pools[s].members()) {
            ClassEntry e;
            e.index = m.index;
            e.unbalanced_triangles = m.triangles;
            e.representative = m.graph;
            e.canonical = canonical_code(m.graph);
            e.tag = classify(m.graph);
            e.multiplicity = m.multiplicity;
            r.entries.push_back(std::move(e));
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

SearchReport enumerate_extremal(std::size_t n, const ForbiddenSpec& spec, std::size_t top_k, std::size_t workers) {
    return enumerate_extremal_multi(n, {spec}, top_k, workers).front();
}

}  // namespace sgx
