#include "sgx/families.hpp"

#include <charconv>
#include <sstream>

namespace sgx {

namespace {

std::vector<SignedEdge> positive_clique(Vertex lo, Vertex hi) {
    std::vector<SignedEdge> es;
    for (Vertex a = lo; a < hi; ++a)
        for (Vertex b = a + 1; b < hi; ++b) es.push_back({a, b, Sign::Positive});
    return es;
}

}  // namespace

SignedGraph gamma(std::size_t n, std::size_t t) {
    if (n < 4 || t < 3 || t > n)
        throw GraphError("gamma(n,t) needs n >= 4 and 3 <= t <= n (got n=" + std::to_string(n) +
                         ", t=" + std::to_string(t) + ")");
    const auto u = static_cast<Vertex>(n - 1);
    auto es = positive_clique(0, u);
    es.push_back({0, u, Sign::Negative});
    for (Vertex v = 1; v + 1 < t; ++v) es.push_back({v, u, Sign::Positive});
    return SignedGraph(n, es);
}

SignedGraph sigma(std::size_t s, std::size_t t, std::size_t r) {
    const std::size_t n = s + t + r + 2;
    if (t < 1 || n < 5)
        throw GraphError("sigma(s,t,r) needs t >= 1 and s+t+r+2 >= 5 (got s=" + std::to_string(s) +
                         ", t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")");
    auto es = positive_clique(2, static_cast<Vertex>(n));
    es.push_back({0, 1, Sign::Negative});
    const auto t_begin = static_cast<Vertex>(2 + s), r_begin = static_cast<Vertex>(2 + s + t);
    for (Vertex w = 2; w < r_begin; ++w) es.push_back({0, w, Sign::Positive});
    for (Vertex w = t_begin; w < n; ++w) es.push_back({1, w, Sign::Positive});
    return SignedGraph(n, es);
}

SignedGraph u1(std::size_t n) {
    if (n < 5) throw GraphError("u1(n) needs n >= 5 (got n=" + std::to_string(n) + ")");
    auto es = positive_clique(2, static_cast<Vertex>(n));
    es.push_back({0, 1, Sign::Negative});
    for (Vertex w = 2; w + 1 < n; ++w) {
        es.push_back({0, w, Sign::Positive});
        es.push_back({1, w, Sign::Positive});
    }
    return SignedGraph(n, es);
}

SignedGraph kn_minus(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& negative) {
    if (n == 0) throw GraphError("kn_minus needs n >= 1");
    std::vector<std::int8_t> neg(n * n, 0);
    for (auto [a, b] : negative) {
        if (a >= n || b >= n || a == b)
            throw GraphError("kn_minus: invalid edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        neg[a * n + b] = neg[b * n + a] = 1;
    }
    std::vector<SignedEdge> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            es.push_back({a, b, neg[a * n + b] ? Sign::Negative : Sign::Positive});
    return SignedGraph(n, es);
}

SignedGraph kn_plus(std::size_t n) { return kn_minus(n, {}); }

Polynomial g_poly(long long n, long long t) {
    return Polynomial{-t * t + (n + 4) * t - n - 7, -(n + t - 3), -(n - 3), 1};
}

Polynomial pq1_poly(long long n, long long t) {
    return Polynomial{4 * n - 12,
                      2 * n * t + 4 * n - 2 * t * t - 2 * t - 16,
                      n * t - n - t * t - 2 * t - 1,
                      9 - 3 * n - t,
                      5 - n,
                      1};
}

IntMatrix q1_matrix(long long n, long long t) {
    return IntMatrix{{0, -1, 1, t - 1, 0},
                     {-1, 0, 0, t - 1, n - t - 2},
                     {1, 0, 0, t - 1, n - t - 2},
                     {1, 1, 1, t - 2, n - t - 2},
                     {0, 1, 1, t - 1, n - t - 3}};
}

Polynomial pq2_poly(long long n) { return Polynomial{n - 3, 3 * n - 10, 8 - 3 * n, 4 - n, 1}; }

IntMatrix q2_matrix(long long n) {
    return IntMatrix{{0, -1, n - 3, 0}, {-1, 0, n - 3, 0}, {1, 1, n - 4, 1}, {0, 0, n - 3, 0}};
}

Polynomial q1_remainder(long long n, long long t) {
    return Polynomial{(t - 5) * (n - t - 1), 5 + 9 * t - 7 * n, 3 + 4 * t - 3 * n, 1};
}

Polynomial q2_remainder(long long n) { return Polynomial{4 * (n - 4), -4}; }

Partition sigma_quotient_partition(std::size_t n, std::size_t t) {
    if (t < 2 || n < t + 3) throw GraphError("sigma quotient partition needs 2 <= t <= n-3");
    // sigma(1, t-1, n-t-2): S = {2}, T = 3..t+1, R = t+2..n-1.
    Partition p{{0}, {1}, {2}, {}, {}};
    for (Vertex v = 3; v < t + 2; ++v) p[3].push_back(v);
    for (Vertex v = static_cast<Vertex>(t + 2); v < n; ++v) p[4].push_back(v);
    return p;
}

Partition u1_quotient_partition(std::size_t n) {
    if (n < 5) throw GraphError("u1 quotient partition needs n >= 5");
    Partition p{{0}, {1}, {}, {static_cast<Vertex>(n - 1)}};
    for (Vertex v = 2; v + 1 < n; ++v) p[2].push_back(v);
    return p;
}

namespace {

std::size_t parse_count(const std::string& tok, const std::string& whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw GraphError("family spec '" + whole + "': bad integer '" + tok + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw GraphError("family spec '" + text + "': missing ':'");
    const std::string name = text.substr(0, colon), rest = text.substr(colon + 1);
    FamilySpec spec;
    auto numbers = [&](const std::string& s, std::size_t want) {
        auto parts = split(s, ',');
        if (parts.size() != want)
            throw GraphError("family spec '" + text + "': expected " + std::to_string(want) + " parameters");
        std::vector<std::size_t> out;
        for (const auto& p : parts) out.push_back(parse_count(p, text));
        return out;
    };
    if (name == "gamma") {
        spec.kind = FamilySpec::Kind::Gamma;
        spec.params = numbers(rest, 2);
    } else if (name == "sigma") {
        spec.kind = FamilySpec::Kind::Sigma;
        spec.params = numbers(rest, 3);
    } else if (name == "u1") {
        spec.kind = FamilySpec::Kind::U1;
        spec.params = numbers(rest, 1);
    } else if (name == "knplus") {
        spec.kind = FamilySpec::Kind::KnPlus;
        spec.params = numbers(rest, 1);
    } else if (name == "knminus") {
        spec.kind = FamilySpec::Kind::KnMinus;
        auto second = rest.find(':');
        spec.params = numbers(rest.substr(0, second), 1);
        if (second != std::string::npos && second + 1 < rest.size()) {
            for (const auto& e : split(rest.substr(second + 1), ';')) {
                auto uv = split(e, ',');
                if (uv.size() != 2) throw GraphError("family spec '" + text + "': bad edge '" + e + "'");
                spec.negative_edges.emplace_back(static_cast<Vertex>(parse_count(uv[0], text)),
                                                 static_cast<Vertex>(parse_count(uv[1], text)));
            }
        }
    } else {
        throw GraphError("family spec '" + text + "': unknown family '" + name + "'");
    }
    return spec;
}

SignedGraph FamilySpec::build() const {
    switch (kind) {
        case Kind::Gamma: return gamma(params[0], params[1]);
        case Kind::Sigma: return sigma(params[0], params[1], params[2]);
        case Kind::U1: return u1(params[0]);
        case Kind::KnMinus: return kn_minus(params[0], negative_edges);
        case Kind::KnPlus: return kn_plus(params[0]);
    }
    throw GraphError("unknown family");
}

std::string FamilySpec::str() const {
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        return s;
    };
    switch (kind) {
        case Kind::Gamma: return "gamma:" + join();
        case Kind::Sigma: return "sigma:" + join();
        case Kind::U1: return "u1:" + join();
        case Kind::KnPlus: return "knplus:" + join();
        case Kind::KnMinus: {
            std::string s = "knminus:" + join() + ":";
            for (std::size_t i = 0; i < negative_edges.size(); ++i)
                s += (i ? ";" : "") + std::to_string(negative_edges[i].first) + "," +
                     std::to_string(negative_edges[i].second);
            return s;
        }
    }
    return {};
}

}  // namespace sgx
