#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>

#include "sgx/matching.hpp"
#include "sgx/search.hpp"
#include "sgx/spectra.hpp"

namespace sgx {

namespace {

using Bits = std::uint64_t;

/// Mutable bitset graph used while climbing.
struct Work {
    std::size_t n = 0;
    std::vector<Bits> adj, neg;
    std::size_t triangles = 0;

    explicit Work(std::size_t order) : n(order), adj(order), neg(order) {}

    bool has(std::size_t a, std::size_t b) const { return adj[a] >> b & 1; }
    bool negative(std::size_t a, std::size_t b) const { return neg[a] >> b & 1; }

    Bits unbalanced_apexes(std::size_t a, std::size_t b) const {
        const Bits common = adj[a] & adj[b];
        const Bits odd = (neg[a] ^ neg[b]) & common;
        return negative(a, b) ? common & ~odd : odd;
    }

    std::size_t edge_triangles(std::size_t a, std::size_t b) const {
        return has(a, b) ? static_cast<std::size_t>(std::popcount(unbalanced_apexes(a, b))) : 0;
    }

    /// sign: 0 removes the edge, +1/-1 sets it. Keeps `triangles` current.
    void set(std::size_t a, std::size_t b, int sign) {
        triangles -= edge_triangles(a, b);
        const Bits ba = Bits{1} << a, bb = Bits{1} << b;
        adj[a] &= ~bb, adj[b] &= ~ba, neg[a] &= ~bb, neg[b] &= ~ba;
        if (sign != 0) {
            adj[a] |= bb, adj[b] |= ba;
            if (sign < 0) neg[a] |= bb, neg[b] |= ba;
        }
        triangles += edge_triangles(a, b);
    }

    int sign(std::size_t a, std::size_t b) const { return !has(a, b) ? 0 : negative(a, b) ? -1 : 1; }

    std::size_t edges() const {
        std::size_t m = 0;
        for (Bits a : adj) m += static_cast<std::size_t>(std::popcount(a));
        return m / 2;
    }

    bool balanced() const {
        std::vector<int> theta(n, 0);
        std::vector<std::size_t> stack;
        for (std::size_t r = 0; r < n; ++r) {
            if (theta[r]) continue;
            theta[r] = 1;
            stack.push_back(r);
            while (!stack.empty()) {
                const std::size_t x = stack.back();
                stack.pop_back();
                for (Bits ys = adj[x]; ys; ys &= ys - 1) {
                    const auto y = static_cast<std::size_t>(std::countr_zero(ys));
                    const int want = negative(x, y) ? -theta[x] : theta[x];
                    if (!theta[y]) {
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

    std::size_t book() const {
        std::size_t best = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (Bits up = adj[a] >> (a + 1); up; up &= up - 1)
                best = std::max(best, edge_triangles(a, a + 1 + std::countr_zero(up)));
        return best;
    }

    std::size_t friendship() const {
        std::size_t best = 0;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> nb;
            for (Bits xs = adj[v]; xs; xs &= xs - 1) nb.push_back(std::countr_zero(xs));
            std::vector<std::vector<int>> link(nb.size());
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (has(nb[i], nb[j]) && sign(v, nb[i]) * sign(v, nb[j]) * sign(nb[i], nb[j]) < 0) {
                        link[i].push_back(static_cast<int>(j));
                        link[j].push_back(static_cast<int>(i));
                    }
            best = std::max(best, maximum_matching_size(link));
        }
        return best;
    }

    bool free_of(const ForbiddenSpec& spec) const {
        switch (spec.kind) {
            case ForbiddenSpec::Kind::TC3: return triangles < spec.threshold;
            case ForbiddenSpec::Kind::C3: return triangles == 0;
            case ForbiddenSpec::Kind::Book: return triangles < spec.threshold || book() < spec.threshold;
            case ForbiddenSpec::Kind::Friendship:
                return triangles < spec.threshold || friendship() < spec.threshold;
        }
        return false;
    }

    void fill(std::vector<double>& a) const {
        a.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (Bits ys = adj[i]; ys; ys &= ys - 1) {
                const auto j = static_cast<std::size_t>(std::countr_zero(ys));
                a[i * n + j] = negative(i, j) ? -1.0 : 1.0;
            }
    }

    SignedGraph graph() const {
        std::vector<SignedEdge> edges;
        for (std::size_t a = 0; a < n; ++a)
            for (Bits up = adj[a] >> (a + 1); up; up &= up - 1) {
                const std::size_t b = a + 1 + std::countr_zero(up);
                edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b),
                                 negative(a, b) ? Sign::Negative : Sign::Positive});
            }
        return SignedGraph(n, edges);
    }
};

/// Every eigenvalue of symmetric `a` lies strictly below theta.
bool all_below(const std::vector<double>& a, std::size_t n, double theta, std::vector<double>& l) {
    l.assign(n * n, 0.0);
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

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
std::size_t below(std::mt19937_64& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

constexpr std::size_t kIsoLimit = kMaxLocalSearchOrder;

class Climber {
public:
    Climber(std::size_t n, const ForbiddenSpec& spec, const LocalSearchOptions& options)
        : n_(n), spec_(spec), options_(options) {
        for (const auto& tag : options.exclude) {
            SignedGraph g = tag.build();
            if (g.order() != n)
                throw GraphError("excluded class " + tag.str() + " has order " + std::to_string(g.order()) +
                                 ", search order is " + std::to_string(n));
            excluded_index_.push_back(sgx::index(g));
            excluded_.push_back(std::move(g));
        }
    }

    std::uint64_t evaluations() const { return evaluations_; }

    /// Best graph reached from restart `restart`, with its index.
    std::pair<Work, double> run(std::size_t restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(options_.seed), static_cast<std::uint32_t>(options_.seed >> 32),
                          static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
        std::mt19937_64 rng(seq);
        Work w = start(rng);
        double current = evaluate(w);
        for (std::size_t step = 0; step < options_.max_steps; ++step) {
            double best = current + options_.improve_tol;
            std::size_t best_a = 0, best_b = 0;
            int best_sign = 2;
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = a + 1; b < n_; ++b) {
                    const int old = w.sign(a, b);
                    const int moves[2][2] = {{1, -1}, {0, -old}};
                    for (int next : moves[old != 0]) {
                        w.set(a, b, next);
                        double lambda;
                        if (w.free_of(spec_) && beats(w, best, lambda) && !w.balanced() && !excluded(w, lambda)) {
                            best = lambda;
                            best_a = a, best_b = b, best_sign = next;
                        }
                        w.set(a, b, old);
                    }
                }
            if (best_sign == 2) break;
            w.set(best_a, best_b, best_sign);
            current = best;
        }
        return {std::move(w), current};
    }

private:
    Work start(std::mt19937_64& rng) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            const double p = 0.3 + 0.7 * uniform01(rng), q = 0.5 * uniform01(rng);
            Work w(n_);
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = a + 1; b < n_; ++b)
                    if (uniform01(rng) < p) w.set(a, b, uniform01(rng) < q ? -1 : 1);
            while (!w.free_of(spec_)) {
                auto tri = triangles(w);
                const auto& t = tri[below(rng, tri.size())];
                const std::size_t k = below(rng, 3);
                w.set(t[k], t[(k + 1) % 3], 0);
            }
            for (std::size_t tries = 4 * w.edges(); w.balanced() && tries > 0; --tries) {
                auto e = edge_at(w, below(rng, w.edges()));
                const int old = w.sign(e.first, e.second);
                w.set(e.first, e.second, -old);
                if (!w.free_of(spec_)) w.set(e.first, e.second, old);
            }
            if (!w.balanced() && !excluded(w, evaluate_quiet(w))) return w;
        }
        // An unbalanced cycle through every vertex avoids every configuration
        // once n >= 4.
        Work w(n_);
        for (std::size_t v = 0; v < n_; ++v) w.set(v, (v + 1) % n_, v == 0 ? -1 : 1);
        if (w.balanced() || !w.free_of(spec_))
            throw GraphError("no unbalanced " + spec_.str() + "-free start graph on " + std::to_string(n_) +
                             " vertices");
        return w;
    }

    static std::vector<std::array<std::size_t, 3>> triangles(const Work& w) {
        std::vector<std::array<std::size_t, 3>> out;
        for (std::size_t a = 0; a < w.n; ++a)
            for (Bits up = w.adj[a] >> (a + 1); up; up &= up - 1) {
                const std::size_t b = a + 1 + std::countr_zero(up);
                for (Bits cs = w.unbalanced_apexes(a, b) >> (b + 1); cs; cs &= cs - 1)
                    out.push_back({a, b, b + 1 + std::countr_zero(cs)});
            }
        return out;
    }

    static std::pair<std::size_t, std::size_t> edge_at(const Work& w, std::size_t k) {
        for (std::size_t a = 0; a < w.n; ++a)
            for (Bits up = w.adj[a] >> (a + 1); up; up &= up - 1)
                if (k-- == 0) return {a, a + 1 + std::countr_zero(up)};
        return {0, 0};
    }

    double evaluate_quiet(const Work& w) {
        w.fill(a_);
        return largest_eigenvalue(a_, n_);
    }

    double evaluate(const Work& w) {
        ++evaluations_;
        return evaluate_quiet(w);
    }

    /// Index strictly above `floor`; computed only when the Cholesky test fails.
    bool beats(const Work& w, double floor, double& lambda) {
        w.fill(a_);
        if (all_below(a_, n_, floor, l_)) return false;
        ++evaluations_;
        lambda = largest_eigenvalue(a_, n_);
        return lambda > floor;
    }

    bool excluded(const Work& w, double lambda) const {
        for (std::size_t i = 0; i < excluded_.size(); ++i)
            if (std::fabs(lambda - excluded_index_[i]) <= kClassTieTol &&
                is_switching_isomorphic(w.graph(), excluded_[i], kIsoLimit))
                return true;
        return false;
    }

    std::size_t n_;
    ForbiddenSpec spec_;
    const LocalSearchOptions& options_;
    std::vector<SignedGraph> excluded_;
    std::vector<double> excluded_index_;
    std::vector<double> a_, l_;
    std::uint64_t evaluations_ = 0;
};

}  // namespace

SearchReport local_search(std::size_t n, const ForbiddenSpec& spec, const LocalSearchOptions& options) {
    if (n < 3 || n > kMaxLocalSearchOrder)
        throw SizeLimitError("local search needs 3 <= n <= " + std::to_string(kMaxLocalSearchOrder) +
                             " (got n=" + std::to_string(n) + ")");
    if (options.restarts == 0) throw GraphError("local search needs at least one restart");
    const auto start = std::chrono::steady_clock::now();

    SearchReport report;
    report.mode = "local_search";
    report.n = n;
    report.spec = spec;
    report.seed = options.seed;
    report.restarts = options.restarts;
    report.excluded = options.exclude;

    Climber climber(n, spec, options);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        auto [w, lambda] = climber.run(r);
        SignedGraph g = w.graph();
        std::size_t slot = report.entries.size();
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            const auto& e = report.entries[i];
            if (std::fabs(e.index - lambda) <= kClassTieTol && e.unbalanced_triangles == w.triangles &&
                e.representative.size() == g.size() && is_switching_isomorphic(e.representative, g, kIsoLimit)) {
                slot = i;
                break;
            }
        }
        if (slot == report.entries.size()) {
            ClassEntry e;
            e.index = lambda;
            e.unbalanced_triangles = w.triangles;
            e.representative = std::move(g);
            report.entries.push_back(std::move(e));
        }
        ++report.entries[slot].multiplicity;
        report.restart_outcomes.push_back({r, lambda, slot});
    }

    std::vector<std::size_t> order(report.entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return report.entries[a].index > report.entries[b].index; });
    std::vector<std::size_t> rank(order.size());
    std::vector<ClassEntry> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        sorted.push_back(std::move(report.entries[order[i]]));
    }
    report.entries = std::move(sorted);
    for (auto& o : report.restart_outcomes) o.entry = rank[o.entry];
    report.top_k = report.entries.size();

    for (auto& e : report.entries) {
        try {
            e.canonical = canonical_code(e.representative, 200'000);
        } catch (const SizeLimitError&) {
            e.canonical = labeled_code(switching_normal_form(e.representative).normalized());
        }
        e.tag = n <= kIsoLimit ? classify(e.representative, kIsoLimit) : ClassificationTag::other();
    }
    report.index_evaluations = climber.evaluations();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace sgx
