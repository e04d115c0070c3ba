#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "chainspec/chain_matrix.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/ferrers.hpp"
#include "chainspec/rational.hpp"

namespace chainspec {

// Second compound of a 0-1 matrix: the C(m,2) x C(n,2) matrix of 2x2
// minors, rows and columns indexed by index pairs in lexicographic order.
// Entries lie in {-1,0,1}; for a staircase pattern no minor is +1.
struct SecondCompound {
    std::vector<std::pair<int, int>> row_pairs;
    std::vector<std::pair<int, int>> col_pairs;
    std::vector<int> entries; // row-major

    int at(std::size_t r, std::size_t c) const { return entries[r * col_pairs.size() + c]; }
};

inline SecondCompound second_compound(const BitMatrix& a, long long size_guard = 1'000'000) {
    if (a.rows() < 2 || a.cols() < 2)
        throw invalid_input("second compound needs at least a 2x2 matrix");
    long long nr = static_cast<long long>(a.rows()) * (a.rows() - 1) / 2;
    long long nc = static_cast<long long>(a.cols()) * (a.cols() - 1) / 2;
    if (nr * nc > size_guard) throw resource_limit("second compound exceeds size guard");

    SecondCompound out;
    out.row_pairs.reserve(static_cast<size_t>(nr));
    out.col_pairs.reserve(static_cast<size_t>(nc));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.rows(); ++j) out.row_pairs.emplace_back(i, j);
    for (int k = 0; k < a.cols(); ++k)
        for (int l = k + 1; l < a.cols(); ++l) out.col_pairs.emplace_back(k, l);

    out.entries.reserve(static_cast<size_t>(nr * nc));
    for (auto [i, j] : out.row_pairs)
        for (auto [k, l] : out.col_pairs) {
            int det = static_cast<int>(a.get(i, k)) * a.get(j, l) -
                      static_cast<int>(a.get(i, l)) * a.get(j, k);
            out.entries.push_back(det);
        }
    return out;
}

// Exact value of the rank-adjusted minor statistic
//   omega(D) = [ sum_{k<l} m_k m_l (r_l (r_k - r_l))^2 ]
//            / [ sum_k r_{k+1} (r_k - r_{k+1}) ]
// over the profile (r, m); zero for a one-block (complete) profile.  The
// denominator counts the nonzero columns of the second compound of the
// staircase pattern, and the numerator is its squared Frobenius mass
// weighted by block multiplicities.
inline Rational omega(const FerrersProfile& p) {
    int h = p.h();
    if (h < 2) return Rational(0);
    long long num = 0;
    for (int k = 0; k < h; ++k)
        for (int l = k + 1; l < h; ++l) {
            long long t = static_cast<long long>(p.r[l]) * (p.r[k] - p.r[l]);
            num += static_cast<long long>(p.m[k]) * p.m[l] * t * t;
        }
    long long den = 0;
    for (int k = 0; k + 1 < h; ++k)
        den += static_cast<long long>(p.r[k + 1]) * (p.r[k] - p.r[k + 1]);
    return Rational(num, den);
}

inline Rational omega(const DegreeSequence& d) { return omega(FerrersProfile::of(d)); }

// Same statistic on the conjugate (column) profile.
inline Rational omega_prime(const FerrersProfile& p) { return omega(p.conjugate()); }
inline Rational omega_prime(const DegreeSequence& d) { return omega_prime(FerrersProfile::of(d)); }

inline Rational omega_star(const FerrersProfile& p) { return max(omega(p), omega_prime(p)); }
inline Rational omega_star(const DegreeSequence& d) { return omega_star(FerrersProfile::of(d)); }

// Upper bound on lambda_max^2 of the bipartite graph:
//   (e + sqrt(e^2 - 4*omega_star)) / 2,
// exact for two-block profiles.  Throws if the discriminant is negative,
// which cannot happen for genuine (omega attainable) inputs.
inline double lambda_sq_upper_bound(long long e, const Rational& omega_star_value) {
    Rational disc = Rational(e) * Rational(e) - Rational(4) * omega_star_value;
    if (disc < Rational(0)) throw numeric_domain("negative discriminant in spectral bound");
    return (static_cast<double>(e) + std::sqrt(disc.to_double())) / 2.0;
}

} // namespace chainspec
