#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "chainspec/degree_sequence.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/rational.hpp"
#include "chainspec/symmetric_eigen.hpp"

namespace chainspec {

// Nonincreasing vector of nonnegative reals c_1 >= ... >= c_m >= 0,
// the parameter of the structured matrix M(c)_ij = min(c_i, c_j).
class CVector {
  public:
    explicit CVector(std::vector<double> c) : c_(std::move(c)) {
        if (c_.empty()) throw invalid_input("c-vector must be nonempty");
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] < 0) throw invalid_input("c-vector entries must be nonnegative");
            if (i && c_[i] > c_[i - 1]) throw invalid_input("c-vector must be nonincreasing");
        }
    }
    explicit CVector(const DegreeSequence& d) : c_(d.values().begin(), d.values().end()) {}

    std::size_t size() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    const std::vector<double>& values() const { return c_; }

    // Number of distinct positive values.
    int distinct_positive() const {
        int h = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] > 0 && (i == 0 || c_[i] != c_[i - 1])) ++h;
        return h;
    }

  private:
    std::vector<double> c_;
};

// M(c)_ij = min(c_i, c_j); with c sorted this is c_max(i,j).  Positive
// semidefinite, and equal to the Gram matrix A*A^T when c is the degree
// sequence of a staircase pattern A.
inline SymMatrix build_cmatrix(const CVector& c) {
    int n = static_cast<int>(c.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = c[static_cast<std::size_t>(std::max(i, j))];
    return m;
}

inline std::vector<double> cmatrix_eigenvalues(const CVector& c) {
    return jacobi_eigenvalues(build_cmatrix(c));
}

// Rank of M(c): the number of distinct positive values of c.  For
// well-separated c this matches the count of eigenvalues above the
// rank tolerance (1e-8).
inline int cmatrix_rank(const CVector& c) { return c.distinct_positive(); }

struct TraceIdentities {
    double e = 0;    // trace(M) = sum c_i
    double s2 = 0;   // trace(M^2) = sum (2i-1) c_i^2  (1-based i)
    double beta = 0; // sum of principal 2x2 minors = sum_{i<j} c_j (c_i - c_j)
};

inline TraceIdentities trace_identities(const CVector& c) {
    TraceIdentities t;
    for (std::size_t i = 0; i < c.size(); ++i) {
        t.e += c[i];
        t.s2 += (2.0 * static_cast<double>(i) + 1.0) * c[i] * c[i];
        for (std::size_t j = i + 1; j < c.size(); ++j) t.beta += c[j] * (c[i] - c[j]);
    }
    return t;
}

// Eigenvalue bounds for M(c).  est1 = sqrt(trace(M^2)) bounds lambda_1
// crudely; maxest sharpens it using the minor sum beta and the distinct
// value count h:
//   maxest = ((2a-1) e + sqrt(e^2 - 4 a beta)) / (2a),  a = h / (2(h-1)),
// with equality at h = 2.  maxest needs h >= 2.
inline double bound_est1(const CVector& c) { return std::sqrt(trace_identities(c).s2); }

inline double bound_maxest(const CVector& c) {
    int h = c.distinct_positive();
    if (h < 2) throw invalid_input("maxest bound needs at least two distinct positive values");
    TraceIdentities t = trace_identities(c);
    double a = static_cast<double>(h) / (2.0 * (h - 1));
    double disc = t.e * t.e - 4.0 * a * t.beta;
    if (disc < 0) throw numeric_domain("negative discriminant in maxest bound");
    return ((2.0 * a - 1.0) * t.e + std::sqrt(disc)) / (2.0 * a);
}

// Decomposition of an integer degree vector d (at least two distinct
// values) as a convex combination of "flat step" vectors
//   a_k = (e'/k) * 1_k + d_m * 1_m,   k = 1..s,
// where d_m is the smallest degree, e' = sum (d_i - d_m) the excess and
// s the number of entries exceeding d_m.  The coefficients
//   alpha_k = k (delta_k - delta_{k+1}) / e'
// are exact rationals summing to 1 with sum_k alpha_k a_k = d entrywise.
struct ConvexDecomposition {
    int base_degree = 0; // d_m
    long long excess = 0;
    std::vector<int> delta; // positive excess profile delta_1 >= ... >= delta_s
    int s = 0;
    std::vector<std::vector<Rational>> vertices; // vertices[k-1] has length m
    std::vector<Rational> coefficients;          // alpha_1..alpha_s

    // Vertex a_k as a CVector (double entries) for spectral evaluation.
    CVector vertex_cvector(int k) const {
        std::vector<double> v;
        v.reserve(vertices[static_cast<std::size_t>(k) - 1].size());
        for (const Rational& x : vertices[static_cast<std::size_t>(k) - 1]) v.push_back(x.to_double());
        return CVector(std::move(v));
    }
};

inline ConvexDecomposition convex_decomposition(const DegreeSequence& d) {
    std::size_t m = d.m();
    int dm = d.back();
    if (d.front() == dm) throw invalid_input("decomposition needs at least two distinct degrees");

    ConvexDecomposition out;
    out.base_degree = dm;
    for (std::size_t i = 0; i < m; ++i)
        if (d[i] > dm) out.delta.push_back(d[i] - dm);
    out.s = static_cast<int>(out.delta.size());
    long long ep = 0;
    for (int v : out.delta) ep += v;
    out.excess = ep;

    for (int k = 1; k <= out.s; ++k) {
        std::vector<Rational> a(m, Rational(dm));
        for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = Rational(dm) + Rational(ep, k);
        out.vertices.push_back(std::move(a));
        long long dk = out.delta[static_cast<std::size_t>(k) - 1];
        long long dk1 = (k < out.s) ? out.delta[static_cast<std::size_t>(k)] : 0;
        out.coefficients.emplace_back(k * (dk - dk1), ep);
    }

    // The combination must reproduce d exactly; anything else is a bug.
    Rational total(0);
    for (const Rational& a : out.coefficients) total = total + a;
    if (total != Rational(1)) throw numeric_domain("convex coefficients do not sum to 1");
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc(0);
        for (int k = 1; k <= out.s; ++k)
            acc = acc + out.coefficients[static_cast<std::size_t>(k) - 1] *
                            out.vertices[static_cast<std::size_t>(k) - 1][i];
        if (acc != Rational(d[i])) throw numeric_domain("convex combination does not reproduce d");
    }
    return out;
}

// Closed-form largest eigenvalue of M(a_k) for a flat step vector:
//   lambda_1 = (e + sqrt(e^2 - 4 k (m-k) (e'/k) d_m)) / 2,  e = e' + m d_m.
inline double vertex_eigenvalue(int m, int k, int base_degree, long long excess) {
    if (m < 1 || k < 1 || k > m) throw invalid_input("vertex index out of range");
    if (base_degree < 0 || excess < 0) throw invalid_input("negative degree data");
    double e = static_cast<double>(excess) + static_cast<double>(m) * base_degree;
    double w = static_cast<double>(m - k) * static_cast<double>(excess) * base_degree;
    double disc = e * e - 4.0 * w;
    if (disc < 0) disc = 0; // impossible mathematically; guards rounding
    return (e + std::sqrt(disc)) / 2.0;
}

} // namespace chainspec
