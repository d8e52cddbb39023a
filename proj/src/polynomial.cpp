#include "sgx/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "sgx/signed_graph.hpp"

namespace sgx {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(long long coeff, std::size_t degree) {
    std::vector<BigInt> c(degree + 1, 0);
    c[degree] = coeff;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_root(long long root) { return Polynomial{-root, 1}; }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long double Polynomial::evaluate(long double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
    return acc;
}

long double Polynomial::derivative_at(long double x) const {
    long double acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 1;)
        acc = acc * x + static_cast<long double>(k) * coeffs_[k].convert_to<long double>();
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(long long k) const {
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c) x *= k;
    return Polynomial(std::move(c));
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        BigInt c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first) out << (neg ? "-" : "");
        else out << (neg ? " - " : " + ");
        if (mag != 1 || k == 0) out << mag;
        if (k >= 1) out << "x";
        if (k >= 2) out << "^" << k;
        first = false;
    }
    return out.str();
}

long double cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) throw GraphError("root bound of a constant polynomial");
    const auto& c = p.coeffs();
    long double lead = std::fabs(c.back().convert_to<long double>());
    long double worst = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        worst = std::max(worst, std::fabs(c[k].convert_to<long double>()) / lead);
    return 1 + worst;
}

long double largest_real_root(const Polynomial& p) {
    long double x = cauchy_root_bound(p);
    const bool positive_lead = p.coeffs().back() > 0;
    // Above every root p has the sign of its leading coefficient and is convex
    // in that direction, so Newton steps decrease monotonically toward the root.
    for (int it = 0; it < 10'000; ++it) {
        long double f = p.evaluate(x), d = p.derivative_at(x);
        if (f == 0 || d == 0) break;
        long double step = f / d;
        if (!(step > 0)) break;  // overshoot by rounding: we are at the root
        x -= step;
        if (step <= 1e-17L * std::max<long double>(1, std::fabs(x))) break;
    }
    // Bisection polish on a tiny bracket around the Newton iterate.
    long double width = 1e-12L * std::max<long double>(1, std::fabs(x));
    long double lo = x - width, hi = x + width;
    auto sgn = [&](long double v) { return positive_lead ? v : -v; };
    if (sgn(p.evaluate(lo)) <= 0 && sgn(p.evaluate(hi)) >= 0) {
        for (int it = 0; it < 200 && hi - lo > 0; ++it) {
            long double mid = lo + (hi - lo) / 2;
            if (mid == lo || mid == hi) break;
            if (sgn(p.evaluate(mid)) >= 0) hi = mid;
            else lo = mid;
        }
        x = hi;
    }
    return x;
}

}  // namespace sgx
