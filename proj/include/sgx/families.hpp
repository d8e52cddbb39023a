#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgx/polynomial.hpp"
#include "sgx/signed_graph.hpp"
#include "sgx/spectra.hpp"

namespace sgx {

// Named extremal constructions. Vertex conventions:
//
//   gamma(n, t)    K_{n-1} on ids 0..n-2, all positive; u = n-1 joined to
//                  ids 0..t-2; the edge (0, n-1) is the only negative edge.
//   sigma(s, t, r) v1 = 0, v2 = 1, negative edge v1v2; S = 2..s+1,
//                  T = s+2..s+t+1, R = the last r ids; positive clique on
//                  S u T u R; v1 ~ S u T and v2 ~ T u R positively.
//   u1(n)          v1 = 0, v2 = 1, negative edge v1v2; positive clique on
//                  2..n-1; v1, v2 ~ 2..n-2 positively (v_n = n-1 is missed).

SignedGraph gamma(std::size_t n, std::size_t t);
SignedGraph sigma(std::size_t s, std::size_t t, std::size_t r);
SignedGraph u1(std::size_t n);
/// Complete graph whose listed edges are negative.
SignedGraph kn_minus(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& negative);
SignedGraph kn_plus(std::size_t n);

/// g_{n,t}(x) = x^3 - (n-3)x^2 - (n+t-3)x - t^2 + (n+4)t - n - 7.
Polynomial g_poly(long long n, long long t);
/// Characteristic polynomial of the five-block quotient of sigma(1, t-1, n-t-2), as a closed form.
Polynomial pq1_poly(long long n, long long t);
IntMatrix q1_matrix(long long n, long long t);
/// Characteristic polynomial of the four-block quotient of u1(n), as a closed form.
Polynomial pq2_poly(long long n);
IntMatrix q2_matrix(long long n);

/// (x+1)^2 g_{n,t}(x) - pq1_poly(n,t) in closed form:
/// x^3 + (3+4t-3n)x^2 + (5+9t-7n)x + (t-5)(n-t-1).
Polynomial q1_remainder(long long n, long long t);
/// (x+1) g_{n,n-2}(x) - pq2_poly(n) in closed form: 4(n - x - 4).
Polynomial q2_remainder(long long n);

/// Blocks {v1}, {v2}, {v4}, common neighbors, v2-private rest, for sigma(1, t-1, n-t-2).
Partition sigma_quotient_partition(std::size_t n, std::size_t t);
/// Blocks {v1}, {v2}, {v3..v_{n-1}}, {v_n} for u1(n).
Partition u1_quotient_partition(std::size_t n);

/// Parsed "gamma:n,t", "sigma:s,t,r", "u1:n", "knminus:n:u,v;u,v", "knplus:n".
struct FamilySpec {
    enum class Kind { Gamma, Sigma, U1, KnMinus, KnPlus };
    Kind kind = Kind::Gamma;
    std::vector<std::size_t> params;
    std::vector<std::pair<Vertex, Vertex>> negative_edges;

    SignedGraph build() const;
    std::string str() const;
};

/// Throws GraphError naming the offending token.
FamilySpec parse_family_spec(const std::string& text);

}  // namespace sgx
