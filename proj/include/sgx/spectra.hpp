#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgx/matrix.hpp"
#include "sgx/polynomial.hpp"
#include "sgx/signed_graph.hpp"

namespace sgx {

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

class EigenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues of a symmetric matrix, sorted descending.
struct Spectrum {
    std::vector<double> values;
    double tol = kDefaultEigenTol;

    double index() const { return values.front(); }
    /// max |lambda_i|
    double spectral_radius() const;
    double sum() const;
};

/// Cyclic Jacobi rotations in fixed row-major sweep order until the
/// off-diagonal Frobenius norm drops below `tol`. Throws EigenError on an
/// asymmetric input (beyond tol) or when kMaxJacobiSweeps are exhausted.
Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol = kDefaultEigenTol);

/// In-place core used by the hot enumeration loops: `a` holds an n x n
/// row-major symmetric matrix and is destroyed; `out` receives the
/// (unsorted) diagonal after convergence.
void jacobi_eigenvalues(std::span<double> a, std::size_t n, std::span<double> out,
                        double tol = kDefaultEigenTol);

/// Largest eigenvalue via jacobi_eigenvalues, no allocation for n <= 16.
double largest_eigenvalue(std::span<double> a, std::size_t n, double tol = kDefaultEigenTol);

Spectrum spectrum(const SignedGraph& g, double tol = kDefaultEigenTol);
/// The index: largest adjacency eigenvalue.
double index(const SignedGraph& g, double tol = kDefaultEigenTol);
double spectral_radius(const SignedGraph& g, double tol = kDefaultEigenTol);

/// det(xI - M) with exact integer coefficients (division-free Berkowitz
/// recursion over arbitrary-precision integers).
Polynomial char_poly_exact(const IntMatrix& m);
Polynomial char_poly_exact(const Matrix<BigInt>& m);
Polynomial char_poly(const SignedGraph& g);

using Partition = std::vector<std::vector<Vertex>>;

/// Block-averaged matrix: entry (i, j) is the average row sum of block M_ij.
struct QuotientMatrix {
    Partition partition;
    Matrix<Rational> entries;
    bool equitable = false;

    /// The entries as integers, when all of them are.
    std::optional<IntMatrix> integral() const;
    /// D^{1/2} Q D^{-1/2} with D = diag(block sizes): symmetric for any
    /// partition of a symmetric matrix, and similar to Q.
    RealMatrix symmetrized() const;
};

/// Throws GraphError unless `partition` is a set of nonempty disjoint
/// blocks covering 0..n-1.
QuotientMatrix quotient_matrix(const IntMatrix& m, const Partition& partition);

/// Eigenvalues of the (real-spectrum) quotient, sorted descending.
Spectrum quotient_spectrum(const QuotientMatrix& q, double tol = kDefaultEigenTol);

struct QuotientSpectrumCheck {
    Spectrum graph_spectrum;
    Spectrum quotient;
    bool contained = false;             ///< every quotient eigenvalue matched within tol
    std::vector<double> residual;       ///< unmatched graph eigenvalues, descending
    std::vector<double> residual_values;///< distinct residual values (clustered within tol)
    bool index_matches = false;         ///< lambda_1(A) == lambda_1(Q) within tol
    double tol = 0;
};

/// Checks that the quotient's eigenvalues form a sub-multiset of the graph's
/// and reports what is left over. Throws GraphError for a non-equitable partition.
QuotientSpectrumCheck verify_quotient_spectrum(const SignedGraph& g, const Partition& partition,
                                               double tol = 1e-8);

}  // namespace sgx
