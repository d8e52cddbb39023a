#include "sgx/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>

namespace sgx {

double Spectrum::spectral_radius() const {
    double r = 0;
    for (double v : values) r = std::max(r, std::fabs(v));
    return r;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

void jacobi_eigenvalues(std::span<double> a, std::size_t n, std::span<double> out, double tol) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0;; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (std::sqrt(2 * off) < tol) break;
        if (sweep == kMaxJacobiSweeps)
            throw EigenError("Jacobi iteration did not converge in " + std::to_string(kMaxJacobiSweeps) +
                             " sweeps");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double app = at(p, p), aqq = at(q, q);
                const double g = 100 * std::fabs(apq);
                // Below rounding relative to both diagonal entries: drop it.
                if (sweep > 3 && std::fabs(app) + g == std::fabs(app) && std::fabs(aqq) + g == std::fabs(aqq)) {
                    at(p, q) = at(q, p) = 0;
                    continue;
                }
                const double theta = (aqq - app) / (2 * apq);
                double t = 1 / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                if (theta < 0) t = -t;
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p), arq = at(r, q);
                    at(r, p) = at(p, r) = c * arp - s * arq;
                    at(r, q) = at(q, r) = s * arp + c * arq;
                }
            }
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = at(i, i);
}

double largest_eigenvalue(std::span<double> a, std::size_t n, double tol) {
    std::array<double, 16> small{};
    std::vector<double> large;
    std::span<double> out;
    if (n <= small.size()) {
        out = std::span<double>(small.data(), n);
    } else {
        large.resize(n);
        out = large;
    }
    jacobi_eigenvalues(a, n, out, tol);
    return *std::max_element(out.begin(), out.end());
}

Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol) {
    if (!m.square() || m.rows() == 0) throw EigenError("eigenvalues need a non-empty square matrix");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(m(i, j) - m(j, i)) > tol)
                throw EigenError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    std::vector<double> work = m.data();
    Spectrum s;
    s.tol = tol;
    s.values.resize(n);
    jacobi_eigenvalues(work, n, s.values, tol);
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

Spectrum spectrum(const SignedGraph& g, double tol) { return eigenvalues_symmetric(g.adjacency_real(), tol); }

double index(const SignedGraph& g, double tol) { return spectrum(g, tol).index(); }

double spectral_radius(const SignedGraph& g, double tol) { return spectrum(g, tol).spectral_radius(); }

Polynomial char_poly_exact(const Matrix<BigInt>& m) {
    if (!m.square()) throw GraphError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // Berkowitz: peel off the leading row/column; each step multiplies by a
    // lower-triangular Toeplitz matrix built from -R A^k C. Coefficients are
    // kept highest degree first while accumulating.
    std::vector<BigInt> poly{1};
    for (std::size_t start = n; start-- > 0;) {
        // Submatrix on indices start..n-1 with leading entry a = m(start, start).
        const std::size_t k = n - start - 1;  // size of the trailing block A
        std::vector<BigInt> diag;
        diag.reserve(k + 2);
        diag.emplace_back(1);
        diag.emplace_back(-m(start, start));
        std::vector<BigInt> vec(k), next(k);
        for (std::size_t i = 0; i < k; ++i) vec[i] = m(start + 1 + i, start);  // C
        for (std::size_t step = 0; step < k; ++step) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < k; ++i) dot += m(start, start + 1 + i) * vec[i];  // R * A^step * C
            diag.push_back(-dot);
            if (step + 1 == k) break;
            for (std::size_t i = 0; i < k; ++i) {
                BigInt acc = 0;
                for (std::size_t j = 0; j < k; ++j) acc += m(start + 1 + i, start + 1 + j) * vec[j];
                next[i] = std::move(acc);
            }
            std::swap(vec, next);
        }
        // Toeplitz (k+2) x (k+1) times poly (length k+1).
        std::vector<BigInt> out(k + 2, 0);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j) out[i] += diag[i - j] * poly[j];
        poly = std::move(out);
    }
    std::reverse(poly.begin(), poly.end());
    return Polynomial(std::move(poly));
}

Polynomial char_poly_exact(const IntMatrix& m) {
    Matrix<BigInt> big(m.rows(), m.cols());
    for (std::size_t k = 0; k < m.data().size(); ++k) big.data()[k] = m.data()[k];
    return char_poly_exact(big);
}

Polynomial char_poly(const SignedGraph& g) { return char_poly_exact(g.adjacency()); }

std::optional<IntMatrix> QuotientMatrix::integral() const {
    IntMatrix out(entries.rows(), entries.cols());
    for (std::size_t k = 0; k < entries.data().size(); ++k) {
        const Rational& r = entries.data()[k];
        if (boost::multiprecision::denominator(r) != 1) return std::nullopt;
        out.data()[k] = boost::multiprecision::numerator(r).convert_to<long long>();
    }
    return out;
}

RealMatrix QuotientMatrix::symmetrized() const {
    const std::size_t k = partition.size();
    RealMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            b(i, j) = entries(i, j).convert_to<double>() *
                      std::sqrt(static_cast<double>(partition[i].size()) / static_cast<double>(partition[j].size()));
    // Exact symmetry holds in rationals; even out the rounding.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) b(i, j) = b(j, i) = (b(i, j) + b(j, i)) / 2;
    return b;
}

QuotientMatrix quotient_matrix(const IntMatrix& m, const Partition& partition) {
    if (!m.square()) throw GraphError("quotient of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) throw GraphError("partition block " + std::to_string(b) + " is empty");
        for (Vertex v : partition[b]) {
            if (v >= n) throw GraphError("partition vertex " + std::to_string(v) + " out of range");
            if (owner[v] != -1) throw GraphError("partition vertex " + std::to_string(v) + " appears twice");
            owner[v] = static_cast<int>(b);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (owner[v] == -1) throw GraphError("partition misses vertex " + std::to_string(v));

    const std::size_t k = partition.size();
    QuotientMatrix q{partition, Matrix<Rational>(k, k), true};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            BigInt total = 0;
            std::optional<long long> row_sum;
            for (Vertex r : partition[i]) {
                long long s = 0;
                for (Vertex c : partition[j]) s += m(r, c);
                total += s;
                if (row_sum && *row_sum != s) q.equitable = false;
                row_sum = s;
            }
            q.entries(i, j) = Rational(total, static_cast<long long>(partition[i].size()));
        }
    return q;
}

Spectrum quotient_spectrum(const QuotientMatrix& q, double tol) { return eigenvalues_symmetric(q.symmetrized(), tol); }

QuotientSpectrumCheck verify_quotient_spectrum(const SignedGraph& g, const Partition& partition, double tol) {
    auto q = quotient_matrix(g.adjacency(), partition);
    if (!q.equitable) throw GraphError("partition is not equitable");
    QuotientSpectrumCheck check;
    check.tol = tol;
    check.graph_spectrum = spectrum(g);
    check.quotient = quotient_spectrum(q);

    std::vector<bool> used(check.graph_spectrum.values.size(), false);
    check.contained = true;
    for (double lq : check.quotient.values) {
        std::size_t best = used.size();
        double best_gap = tol;
        for (std::size_t i = 0; i < used.size(); ++i) {
            double gap = std::fabs(check.graph_spectrum.values[i] - lq);
            if (!used[i] && gap <= best_gap) {
                best = i;
                best_gap = gap;
            }
        }
        if (best == used.size()) check.contained = false;
        else used[best] = true;
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) check.residual.push_back(check.graph_spectrum.values[i]);
    for (double r : check.residual)
        if (check.residual_values.empty() || std::fabs(check.residual_values.back() - r) > tol)
            check.residual_values.push_back(r);
    check.index_matches = std::fabs(check.graph_spectrum.index() - check.quotient.index()) <= tol;
    return check;
}

}  // namespace sgx
