#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "chainspec/chain_matrix.hpp"
#include "chainspec/degree_sequence.hpp"
#include "chainspec/errors.hpp"

namespace chainspec {

inline constexpr long long kDefaultBudget = 10'000'000;

// Work budget for exhaustive searches, overridable via CHAINSPEC_BUDGET.
inline long long default_budget() {
    const char* env = std::getenv("CHAINSPEC_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (!end || *end != '\0' || v <= 0) throw invalid_input("CHAINSPEC_BUDGET must be a positive integer");
    return v;
}

// Candidate degree sequences for the extremal problem on p x q frames with
// e edges: partitions of e into at most p parts, each part at most q,
// excluding the all-equal sequences (complete-bipartite patterns).
// Emitted in descending lexicographic order.
inline std::vector<DegreeSequence> enumerate_chain_candidates(int p, int q, long long e) {
    if (p < 2 || q < p) throw invalid_input("need 2 <= p <= q");
    if (e <= 1 || e >= static_cast<long long>(p) * q)
        throw invalid_input("need 1 < e < p*q");

    std::vector<DegreeSequence> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long long remaining, int max_part, int parts_left) -> void {
        if (remaining == 0) {
            bool all_equal = true;
            for (std::size_t i = 1; i < cur.size(); ++i)
                if (cur[i] != cur[0]) all_equal = false;
            if (!all_equal) out.emplace_back(cur);
            return;
        }
        if (parts_left == 0) return;
        long long lo = (remaining + parts_left - 1) / parts_left; // ceil
        for (long long v = std::min<long long>(max_part, remaining); v >= lo; --v) {
            cur.push_back(static_cast<int>(v));
            self(self, remaining - v, static_cast<int>(v), parts_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, e, q, p);
    return out;
}

namespace detail {
// Next n-bit word with the same popcount (Gosper); 0 when exhausted.
inline std::uint64_t next_same_popcount(std::uint64_t v, std::uint64_t limit) {
    std::uint64_t t = v | (v - 1);
    if (t == ~std::uint64_t{0}) return 0;
    std::uint64_t w = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    return w > limit ? 0 : w;
}
} // namespace detail

// Visits every m x n 0-1 matrix whose row i sums to d_i and whose columns
// all have at least one 1.  Row sums follow the sorted order of d; every
// bipartite graph with left degree multiset d appears up to a row
// permutation, which no spectral quantity can see.  The search prunes a
// partial matrix whenever the uncovered columns outnumber the 1s still to
// be placed.  Each candidate row placement costs one unit of budget;
// exceeding it raises resource_limit.  Returns the work spent, so callers
// looping over several column counts can share one budget.
template <typename Visit>
long long for_each_row_sum_matrix(const DegreeSequence& d, int n, long long budget, Visit&& visit) {
    if (n < 1 || n > 63) throw invalid_input("column count must be in 1..63");
    if (budget <= 0) throw resource_limit("row-sum matrix enumeration has no budget left");
    const int m = static_cast<int>(d.m());
    if (m > 64) throw invalid_input("too many rows");

    std::vector<long long> suffix(static_cast<std::size_t>(m) + 1, 0);
    for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];

    const std::uint64_t full = BitMatrix::full_mask(n);
    BitMatrix a(m, n);
    long long work = 0;

    auto rec = [&](auto&& self, int i, std::uint64_t covered) -> void {
        if (i == m) {
            visit(static_cast<const BitMatrix&>(a));
            return;
        }
        if (d[i] > n) return; // row cannot fit
        std::uint64_t mask = BitMatrix::full_mask(d[i]);
        for (; mask != 0; mask = detail::next_same_popcount(mask, full)) {
            if (++work > budget) throw resource_limit("row-sum matrix enumeration exceeded budget");
            std::uint64_t cov = covered | mask;
            if (n - std::popcount(cov) > suffix[i + 1]) continue;
            a.set_row_mask(i, mask);
            self(self, i + 1, cov);
        }
    };
    rec(rec, 0, 0);
    return work;
}

inline std::vector<BitMatrix> enumerate_row_sum_matrices(const DegreeSequence& d, int n,
                                                         long long budget = kDefaultBudget) {
    std::vector<BitMatrix> out;
    for_each_row_sum_matrix(d, n, budget, [&](const BitMatrix& a) { out.push_back(a); });
    return out;
}

} // namespace chainspec
