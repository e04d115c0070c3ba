#pragma once

// Shared generators and brute-force oracles for the test suite.

#include <random>
#include <vector>

#include "chainspec/chainspec.hpp"

namespace testutil {

using namespace chainspec;

// Every nonempty degree multiset with at most max_m entries, each in
// [1, max_d], total at most max_e; nonincreasing representatives.
inline std::vector<DegreeSequence> all_degree_multisets(int max_m, int max_d,
                                                        long long max_e = 1'000'000) {
    std::vector<DegreeSequence> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part, long long sum) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_m) return;
        for (int v = max_part; v >= 1; --v) {
            if (sum + v > max_e) continue;
            cur.push_back(v);
            self(self, v, sum + v);
            cur.pop_back();
        }
    };
    rec(rec, max_d, 0);
    return out;
}

// Every profile with h in [1, h_max], distinct degrees within [1, r1_max],
// multiplicities in [1, mult_max].
inline std::vector<FerrersProfile> all_profiles(int h_max, int r1_max, int mult_max) {
    std::vector<FerrersProfile> out;
    std::vector<int> rs;
    std::vector<int> ms;
    auto fill_mults = [&](auto&& self, std::size_t k) -> void {
        if (k == rs.size()) {
            FerrersProfile p;
            p.r = rs;
            p.m = ms;
            out.push_back(p);
            return;
        }
        for (int mv = 1; mv <= mult_max; ++mv) {
            ms.push_back(mv);
            self(self, k + 1);
            ms.pop_back();
        }
    };
    auto pick_r = [&](auto&& self, int next_max) -> void {
        if (!rs.empty()) fill_mults(fill_mults, 0);
        if (static_cast<int>(rs.size()) == h_max) return;
        for (int v = next_max; v >= 1; --v) {
            rs.push_back(v);
            self(self, v - 1);
            rs.pop_back();
        }
    };
    pick_r(pick_r, r1_max);
    return out;
}

inline DegreeSequence random_degrees(std::mt19937& g, int max_m, int max_d, int min_m = 1) {
    std::uniform_int_distribution<int> md(min_m, max_m);
    int m = md(g);
    std::uniform_int_distribution<int> dd(1, max_d);
    std::vector<int> d(static_cast<std::size_t>(m));
    for (int& v : d) v = dd(g);
    return DegreeSequence(std::move(d));
}

// Random 0-1 pattern without zero rows or columns (rejection sampling).
inline BitMatrix random_pattern(std::mt19937& g, int max_m, int max_n, double density) {
    std::uniform_int_distribution<int> md(1, max_m), nd(1, max_n);
    std::bernoulli_distribution bit(density);
    for (;;) {
        int m = md(g), n = nd(g);
        BitMatrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (bit(g)) a.set(i, j, true);
        if (!a.has_zero_row() && !a.has_zero_col()) return a;
    }
}

// Random strictly dominating pair (d, d'), both within the given caps.
inline std::pair<DegreeSequence, DegreeSequence> random_dominating_pair(std::mt19937& g, int max_m,
                                                                        int max_d) {
    for (;;) {
        DegreeSequence lower = random_degrees(g, max_m, max_d);
        std::vector<int> upper(lower.values());
        std::uniform_int_distribution<int> extra_rows(0, max_m - static_cast<int>(lower.m()));
        int add = extra_rows(g);
        std::uniform_int_distribution<int> dd(1, max_d);
        for (int i = 0; i < add; ++i) upper.push_back(dd(g));
        for (int& v : upper) {
            std::uniform_int_distribution<int> bump(0, max_d - v);
            v += bump(g);
        }
        DegreeSequence up(std::move(upper));
        if (dominates(up, lower)) return {up, lower};
    }
}

// Independent quadruple-loop minimizer of m1*m2*n1*n2 over the edge
// constraint m1*n1 + m1*n2 + m2*n1 = e with both side sums at least r.
inline std::pair<long long, std::vector<TwoBlockZ>> brute_min_omega(long long e, int r) {
    long long best = -1;
    std::vector<TwoBlockZ> arg;
    for (long long m1 = 1; m1 <= e; ++m1)
        for (long long m2 = 1; m2 <= e; ++m2)
            for (long long n1 = 1; n1 <= e; ++n1)
                for (long long n2 = 1; n2 <= e; ++n2) {
                    if (m1 * n1 + m1 * n2 + m2 * n1 != e) continue;
                    if (m1 + m2 < r || n1 + n2 < r) continue;
                    long long w = m1 * m2 * n1 * n2;
                    if (best < 0 || w < best) {
                        best = w;
                        arg.clear();
                    }
                    if (w == best) arg.push_back({m1, m2, n1, n2});
                }
    return {best, arg};
}

} // namespace testutil
