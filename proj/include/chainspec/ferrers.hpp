#pragma once

#include <vector>

#include "chainspec/degree_sequence.hpp"
#include "chainspec/errors.hpp"

namespace chainspec {

// Run-length profile of a degree sequence: the distinct degrees
// r[0] > r[1] > ... > r[h-1] >= 1 with multiplicities m[k] >= 1.
// This is the Ferrers/staircase description of the left-justified 0-1
// pattern whose row sums are the degrees.
struct FerrersProfile {
    std::vector<int> r; // distinct degrees, strictly decreasing
    std::vector<int> m; // multiplicities, same length

    int h() const { return static_cast<int>(r.size()); }

    long long edges() const {
        long long e = 0;
        for (int k = 0; k < h(); ++k) e += static_cast<long long>(r[k]) * m[k];
        return e;
    }

    long long rows() const {
        long long n = 0;
        for (int v : m) n += v;
        return n;
    }

    static FerrersProfile of(const DegreeSequence& d) {
        FerrersProfile p;
        for (std::size_t i = 0; i < d.m(); ++i) {
            if (p.r.empty() || d[i] != p.r.back()) {
                p.r.push_back(d[i]);
                p.m.push_back(1);
            } else {
                ++p.m.back();
            }
        }
        return p;
    }

    DegreeSequence degrees() const {
        std::vector<int> out;
        for (int k = 0; k < h(); ++k) out.insert(out.end(), m[k], r[k]);
        return DegreeSequence(std::move(out));
    }

    // Profile of the transposed staircase (column sums of the pattern):
    //   r'[i] = m[0] + ... + m[h-1-i],   m'[i] = r[h-1-i] - r[h-i]
    // with r[h] read as 0.  Applying it twice restores the original.
    FerrersProfile conjugate() const {
        FerrersProfile c;
        int hh = h();
        c.r.resize(hh);
        c.m.resize(hh);
        long long prefix = 0;
        for (int k = 0; k < hh; ++k) prefix += m[k];
        for (int i = 0; i < hh; ++i) {
            c.r[i] = static_cast<int>(prefix);
            prefix -= m[hh - 1 - i];
            int next = (hh - i < hh) ? r[hh - i] : 0;
            c.m[i] = r[hh - 1 - i] - next;
        }
        return c;
    }

    friend bool operator==(const FerrersProfile& a, const FerrersProfile& b) {
        return a.r == b.r && a.m == b.m;
    }
};

// Column sums of the left-justified pattern with row sums d, as a degree
// sequence.  Conjugation is an involution on degree sequences.
inline DegreeSequence conjugate_degrees(const DegreeSequence& d) {
    return FerrersProfile::of(d).conjugate().degrees();
}

} // namespace chainspec
