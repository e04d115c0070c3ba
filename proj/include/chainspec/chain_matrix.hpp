#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "chainspec/degree_sequence.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/ferrers.hpp"

namespace chainspec {

// Dense 0-1 matrix with rows stored as bitmasks (column j = bit j).
// Sized for desk-scale search: at most 64 columns and 64 rows.
class BitMatrix {
  public:
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(static_cast<size_t>(rows), 0) {
        if (rows < 1 || cols < 1) throw invalid_input("matrix dimensions must be positive");
        if (rows > 64 || cols > 64) throw invalid_input("matrix larger than 64x64");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const { return (bits_[i] >> j) & 1U; }
    void set(int i, int j, bool v) {
        if (v)
            bits_[i] |= (std::uint64_t{1} << j);
        else
            bits_[i] &= ~(std::uint64_t{1} << j);
    }

    std::uint64_t row_mask(int i) const { return bits_[i]; }
    void set_row_mask(int i, std::uint64_t mask) { bits_[i] = mask; }

    int row_sum(int i) const { return std::popcount(bits_[i]); }
    int col_sum(int j) const {
        int s = 0;
        for (int i = 0; i < rows_; ++i) s += get(i, j);
        return s;
    }

    long long ones() const {
        long long s = 0;
        for (int i = 0; i < rows_; ++i) s += row_sum(i);
        return s;
    }

    bool has_zero_row() const {
        for (int i = 0; i < rows_; ++i)
            if (bits_[i] == 0) return true;
        return false;
    }

    bool has_zero_col() const {
        std::uint64_t all = 0;
        for (int i = 0; i < rows_; ++i) all |= bits_[i];
        return all != full_mask(cols_);
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    DegreeSequence row_sums() const {
        std::vector<int> d(rows_);
        for (int i = 0; i < rows_; ++i) d[i] = row_sum(i);
        return DegreeSequence(std::move(d));
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
            s += '\n';
        }
        return s;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }

    static std::uint64_t full_mask(int n) {
        return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

  private:
    int rows_, cols_;
    std::vector<std::uint64_t> bits_;
};

// The left-justified (staircase) pattern with row sums d: row i has ones in
// columns 0..d_i-1.  Its shape is m x d_1 and it has no zero column.
inline BitMatrix chain_matrix(const DegreeSequence& d) {
    if (d.front() > 64) throw invalid_input("chain pattern wider than 64 columns");
    if (d.m() > 64) throw invalid_input("chain pattern taller than 64 rows");
    BitMatrix a(static_cast<int>(d.m()), d.front());
    for (std::size_t i = 0; i < d.m(); ++i) a.set_row_mask(static_cast<int>(i), BitMatrix::full_mask(d[i]));
    return a;
}

// True when every entry is 1 (the pattern of a complete bipartite graph).
// Requires a matrix with no zero row or column.
inline bool is_complete_pattern(const BitMatrix& a) {
    if (a.has_zero_row() || a.has_zero_col())
        throw invalid_input("pattern has an isolated vertex");
    for (int i = 0; i < a.rows(); ++i)
        if (a.row_mask(i) != BitMatrix::full_mask(a.cols())) return false;
    return true;
}

namespace detail {
// Value of a line (row read left-to-right, or column read top-to-bottom)
// with the first position as the most significant bit, for lexicographic
// comparison.
inline std::uint64_t line_value(std::uint64_t mask, int len) {
    std::uint64_t v = 0;
    for (int j = 0; j < len; ++j) v = (v << 1) | ((mask >> j) & 1U);
    return v;
}
} // namespace detail

// Canonical representative under independent row/column permutations for
// the patterns this library compares: rows and columns sorted by (sum, lex)
// descending, alternating until both orders hold at once.  The chain pattern
// is a fixed point, and any matrix whose rows and columns are nested (a
// permuted staircase) maps to the chain pattern of its row sums.
inline BitMatrix canonical_form(const BitMatrix& a) {
    auto pass = [](const BitMatrix& in) {
        std::vector<std::uint64_t> rows(in.rows());
        for (int i = 0; i < in.rows(); ++i) rows[i] = in.row_mask(i);
        std::stable_sort(rows.begin(), rows.end(), [&](std::uint64_t x, std::uint64_t y) {
            int sx = std::popcount(x), sy = std::popcount(y);
            if (sx != sy) return sx > sy;
            return detail::line_value(x, in.cols()) > detail::line_value(y, in.cols());
        });
        BitMatrix r(in.rows(), in.cols());
        for (int i = 0; i < in.rows(); ++i) r.set_row_mask(i, rows[i]);

        BitMatrix t = r.transposed();
        std::vector<std::uint64_t> cols(t.rows());
        for (int i = 0; i < t.rows(); ++i) cols[i] = t.row_mask(i);
        std::stable_sort(cols.begin(), cols.end(), [&](std::uint64_t x, std::uint64_t y) {
            int sx = std::popcount(x), sy = std::popcount(y);
            if (sx != sy) return sx > sy;
            return detail::line_value(x, t.cols()) > detail::line_value(y, t.cols());
        });
        BitMatrix out(in.rows(), in.cols());
        for (int j = 0; j < in.cols(); ++j)
            for (int i = 0; i < in.rows(); ++i)
                if ((cols[j] >> i) & 1U) out.set(i, j, true);
        return out;
    };
    // Iterate to a fixed point so the result is idempotent.  This always
    // terminates: the first pass freezes the row and column sum orders, and
    // every later pass that changes anything strictly increases the matrix
    // read row-major as a binary number.
    BitMatrix cur = pass(a);
    for (;;) {
        BitMatrix next = pass(cur);
        if (next == cur) return cur;
        cur = next;
    }
}

} // namespace chainspec
