#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "chainspec/chain_matrix.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/symmetric_eigen.hpp"

namespace chainspec {

// Gram matrix A*A^T of a 0-1 pattern, as exact small integers in doubles.
inline SymMatrix gram_matrix(const BitMatrix& a) {
    SymMatrix g(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.rows(); ++j) {
            double v = static_cast<double>(std::popcount(a.row_mask(i) & a.row_mask(j)));
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

// Largest singular value of A, i.e. the largest eigenvalue of the bipartite
// adjacency matrix [[0,A],[A^T,0]].
inline double sigma1(const BitMatrix& a) {
    if (a.ones() == 0) throw invalid_input("zero pattern has no spectrum of interest");
    std::vector<double> ev = jacobi_eigenvalues(gram_matrix(a));
    return std::sqrt(std::max(ev.front(), 0.0));
}

// Two largest singular values.  sigma2 is exactly 0 for rank-1 patterns.
inline std::pair<double, double> sigma_pair(const BitMatrix& a) {
    if (a.ones() == 0) throw invalid_input("zero pattern has no spectrum of interest");
    std::vector<double> ev = jacobi_eigenvalues(gram_matrix(a));
    double s1 = std::sqrt(std::max(ev.front(), 0.0));
    double s2 = ev.size() > 1 ? std::sqrt(std::max(ev[1], 0.0)) : 0.0;
    return {s1, s2};
}

// Unit left singular vector for sigma1 (top eigenvector of A*A^T).  For a
// chain pattern it can be taken entrywise positive and nonincreasing.
inline std::vector<double> dominant_left_vector(const BitMatrix& a) {
    if (a.ones() == 0) throw invalid_input("zero pattern has no spectrum of interest");
    return jacobi_eigen(gram_matrix(a)).vectors.front();
}

// Full eigenvalue list of the (rows+cols)-vertex bipartite adjacency
// matrix; comes in +/- pairs padded with zeros.
inline std::vector<double> adjacency_eigenvalues(const BitMatrix& a) {
    int n = a.rows() + a.cols();
    SymMatrix b(n);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) {
                b.at(i, a.rows() + j) = 1.0;
                b.at(a.rows() + j, i) = 1.0;
            }
    return jacobi_eigenvalues(b);
}

struct SpectralSummary {
    double sigma1 = 0;
    double sigma2 = 0;
    long long edges = 0;
    double sqrt_e_gap = 0;  // sqrt(e) - sigma1, nonnegative up to tolerance
    bool at_sqrt_e = false; // gap below tolerance
    bool complete = false;  // all-ones pattern
};

// sqrt(e) always bounds sigma1 from above, with equality exactly for the
// complete (all-ones) pattern; the summary carries both flags so callers
// can cross-check them.
inline SpectralSummary spectral_summary(const BitMatrix& a, double tolerance = 1e-9) {
    SpectralSummary s;
    auto [s1, s2] = sigma_pair(a);
    s.sigma1 = s1;
    s.sigma2 = s2;
    s.edges = a.ones();
    s.sqrt_e_gap = std::sqrt(static_cast<double>(s.edges)) - s1;
    s.at_sqrt_e = s.sqrt_e_gap < tolerance;
    s.complete = is_complete_pattern(a);
    return s;
}

inline double sqrt_e_gap(const BitMatrix& a) {
    return std::sqrt(static_cast<double>(a.ones())) - sigma1(a);
}

} // namespace chainspec
