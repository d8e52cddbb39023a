#include "sgx/families.hpp"
#include "sgx/search.hpp"

namespace sgx {

std::string ClassificationTag::str() const {
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        return s;
    };
    switch (family) {
        case Family::Gamma: return "Gamma(" + join() + ")";
        case Family::Sigma: return "Sigma(" + join() + ")";
        case Family::U1: return "U1(" + join() + ")";
        case Family::Other: return "Other";
    }
    return "Other";
}

SignedGraph ClassificationTag::build() const {
    switch (family) {
        case Family::Gamma: return sgx::gamma(params.at(0), params.at(1));
        case Family::Sigma: return sgx::sigma(params.at(0), params.at(1), params.at(2));
        case Family::U1: return sgx::u1(params.at(0));
        case Family::Other: break;
    }
    throw GraphError("tag 'Other' names no construction");
}

ClassificationTag parse_classification_tag(const std::string& text) {
    std::string spec = text;
    const auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')') throw GraphError("class tag '" + text + "': missing ')'");
        spec = spec.substr(0, open) + ":" + spec.substr(open + 1, spec.size() - open - 2);
    }
    for (auto& c : spec)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    const FamilySpec f = parse_family_spec(spec);
    switch (f.kind) {
        case FamilySpec::Kind::Gamma: return ClassificationTag::gamma(f.params.at(0), f.params.at(1));
        case FamilySpec::Kind::Sigma: return ClassificationTag::sigma(f.params.at(0), f.params.at(1), f.params.at(2));
        case FamilySpec::Kind::U1: return ClassificationTag::u1(f.params.at(0));
        default: break;
    }
    throw GraphError("class tag '" + text + "': only gamma, sigma and u1 name classes");
}

ClassificationTag classify(const SignedGraph& g, std::size_t limit) {
    const std::size_t n = g.order(), m = g.size();
    if (n > limit)
        throw SizeLimitError("classify limited to n <= " + std::to_string(limit) + " (got n=" + std::to_string(n) + ")");
    const std::size_t tri = count_unbalanced_triangles(g);
    auto clique = [](std::size_t k) { return k * (k - 1) / 2; };

    if (n >= 4)
        for (std::size_t t = 3; t <= n; ++t)
            if (m == clique(n - 1) + t - 1 && tri == t - 2 && is_switching_isomorphic(g, sgx::gamma(n, t), limit))
                return ClassificationTag::gamma(n, t);
    if (n >= 5) {
        for (std::size_t s = 1; s + 3 <= n; ++s)
            for (std::size_t t = 1; s + t + 2 <= n; ++t) {
                std::size_t r = n - 2 - s - t;
                if (m == clique(n - 2) + 1 + s + 2 * t + r && tri == t &&
                    is_switching_isomorphic(g, sgx::sigma(s, t, r), limit))
                    return ClassificationTag::sigma(s, t, r);
            }
        if (m == clique(n - 2) + 1 + 2 * (n - 3) && tri == n - 3 && is_switching_isomorphic(g, sgx::u1(n), limit))
            return ClassificationTag::u1(n);
    }
    return ClassificationTag::other();
}

}  // namespace sgx
