#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "chainspec/errors.hpp"

namespace chainspec {

// Dense symmetric matrix of doubles (full storage).
class SymMatrix {
  public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 1) throw invalid_input("matrix order must be positive");
    }

    int order() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    double frobenius_norm() const {
        double s = 0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

  private:
    int n_;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values;               // nonincreasing
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
};

// Cyclic Jacobi for symmetric matrices.  Sweeps rotate every off-diagonal
// pair in a fixed order until the off-diagonal Frobenius mass drops below
// 1e-14 times the initial norm, which leaves eigenvalues accurate to near
// machine precision on the well-conditioned Gram matrices handled here.
inline EigenDecomposition jacobi_eigen(SymMatrix m) {
    const int n = m.order();
    std::vector<std::vector<double>> v(static_cast<size_t>(n), std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0; // v[i][k]: component i of eigenvector k

    const double norm = m.frobenius_norm();
    const double tol = 1e-14 * (norm > 0 ? norm : 1.0);

    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * m.at(i, j) * m.at(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        if (sweep == 99) throw numeric_domain("jacobi eigensolver did not converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) <= tol / (n * n + 1.0)) continue;
                double theta = (m.at(q, q) - m.at(p, p)) / (2 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1));
                if (theta < 0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1);
                double s = t * c;
                double tau = s / (1 + c);
                double app = m.at(p, p), aqq = m.at(q, q);
                m.at(p, p) = app - t * apq;
                m.at(q, q) = aqq + t * apq;
                m.at(p, q) = m.at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = m.at(k, p), akq = m.at(k, q);
                    m.at(k, p) = m.at(p, k) = akp - s * (akq + tau * akp);
                    m.at(k, q) = m.at(q, k) = akq + s * (akp - tau * akq);
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = vkp - s * (vkq + tau * vkp);
                    v[k][q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return m.at(a, a) > m.at(b, b); });

    EigenDecomposition out;
    out.values.reserve(static_cast<size_t>(n));
    out.vectors.reserve(static_cast<size_t>(n));
    for (int k : idx) {
        out.values.push_back(m.at(k, k));
        std::vector<double> vec(static_cast<size_t>(n));
        int lead = 0;
        for (int i = 0; i < n; ++i) {
            vec[i] = v[i][k];
            if (std::abs(vec[i]) > std::abs(vec[lead])) lead = i;
        }
        if (vec[lead] < 0) // fix the sign for deterministic output
            for (double& x : vec) x = -x;
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

inline std::vector<double> jacobi_eigenvalues(const SymMatrix& m) {
    return jacobi_eigen(m).values;
}

} // namespace chainspec
