#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sgx/matrix.hpp"

namespace sgx {

/// Dense polynomial with exact integer coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);
    Polynomial(std::initializer_list<long long> coeffs);

    static Polynomial monomial(long long coeff, std::size_t degree);
    /// x - root
    static Polynomial linear_root(long long root);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

    long double evaluate(long double x) const;
    long double derivative_at(long double x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(long long k) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Human-readable form in the variable "x", e.g. "x^3 - 3x - 2".
std::string to_string(const Polynomial& p);

/// Largest real root of a polynomial whose roots are all real, by Newton's
/// method started above the Cauchy root bound (monotone convergence) and
/// polished by bisection. Throws GraphError for a constant polynomial.
long double largest_real_root(const Polynomial& p);

/// Cauchy bound 1 + max|c_k / c_deg| on the magnitude of every root.
long double cauchy_root_bound(const Polynomial& p);

}  // namespace sgx
