#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgx/search.hpp"

namespace sgx {

/// Outcome of one verification target over a range of orders.
struct VerifyReport {
    std::string target;
    std::size_t lo = 0, hi = 0;
    bool passed = true;
    bool evidence = false;  ///< stochastic support, not an exhaustive check
    /// Smallest signed margin by which an asserted strict inequality held.
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<nlohmann::json> rows;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double wall_seconds = 0;

    void fail(std::string why) {
        passed = false;
        failures.push_back(std::move(why));
    }
};

/// Quotient charpolys against their closed forms and both remainder
/// identities, in exact integer arithmetic, for lo <= n <= hi, 3 <= t <= n-3.
/// Requires lo >= 9.
VerifyReport verify_identities(std::size_t lo, std::size_t hi);

/// index(gamma(n,t)) against the largest root of g_{n,t} (1e-8), the bounds
/// n-2 <= index < n-1, and equality with n-2 exactly when t = 3. Requires lo >= 4.
VerifyReport verify_gamma_root(std::size_t lo, std::size_t hi, double tol = 1e-8);

/// Sign of index(gamma(n,t)) - index(sigma(1,t-1,n-t-2)) for 3 <= t <= n-3:
/// positive up to floor(n/2), negative after. Requires lo >= 9.
VerifyReport verify_gamma_sigma_crossing(std::size_t lo, std::size_t hi, double tol = 1e-9);

/// index(gamma(n,n-2)) > index(u1(n)), preceded by the exact remainder
/// identity. Orders below 9 are reported without assertion. Requires lo >= 5.
VerifyReport verify_gamma_u1(std::size_t lo, std::size_t hi, double tol = 1e-9);

/// (sqrt(n^2 - 8) + n - 4) / 2
double c3_free_radius_bound(std::size_t n);

/// Every connected unbalanced signed graph on n vertices without an
/// unbalanced triangle has spectral radius at most c3_free_radius_bound(n)
/// (+ tol). Exhaustive; 3 <= lo <= hi <= 6.
VerifyReport verify_c3_bound(std::size_t lo, std::size_t hi, double tol = 1e-9);

/// gamma(n, t+1) for 2 <= t <= n-2, gamma(n, n) for t >= n-1.
ClassificationTag extremal_class(std::size_t n, std::size_t t);
/// Runner-up once extremal_class(n, t) is excluded, for t >= 3.
ClassificationTag runner_up_class(std::size_t n, std::size_t t);

/// Exhaustive top-2 enumeration for tc3:t, 2 <= t <= n+1: the top class is
/// unique, equals extremal_class(n,t), and its index matches (1e-9). Orders
/// below 6 are reported without assertion. hi <= 7.
VerifyReport verify_extremal_exhaustive(std::size_t lo, std::size_t hi, std::size_t workers = 1,
                                        double tol = 1e-9);

/// Seeded local search with extremal_class(n,t) excluded, 3 <= t <= n-1: the
/// best class equals runner_up_class(n,t) and nothing beats its index (1e-9).
/// Evidence only. Orders below 9 are reported without assertion.
VerifyReport verify_runner_up_search(std::size_t lo, std::size_t hi, std::uint64_t seed = 42,
                                     std::size_t restarts = 1000, double tol = 1e-9);

}  // namespace sgx
