#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "chainspec/errors.hpp"

namespace chainspec {

// Multiset of positive vertex degrees for one side of a bipartite graph,
// kept sorted nonincreasing.  d(1) >= d(2) >= ... >= d(m) >= 1.
class DegreeSequence {
  public:
    explicit DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {
        if (d_.empty()) throw invalid_input("degree sequence must be nonempty");
        for (int v : d_)
            if (v <= 0) throw invalid_input("degrees must be positive");
        std::sort(d_.begin(), d_.end(), std::greater<int>());
    }

    // Parses "5,2,2,1" (whitespace around tokens tolerated).
    static DegreeSequence parse(const std::string& text) {
        std::vector<int> out;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            size_t a = token.find_first_not_of(" \t");
            size_t b = token.find_last_not_of(" \t");
            if (a == std::string::npos) throw invalid_input("empty degree token in '" + text + "'");
            token = token.substr(a, b - a + 1);
            size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &used);
            } catch (const std::exception&) {
                throw invalid_input("bad degree token '" + token + "'");
            }
            if (used != token.size()) throw invalid_input("bad degree token '" + token + "'");
            if (v <= 0 || v > 1'000'000'000) throw invalid_input("degree out of range: '" + token + "'");
            out.push_back(static_cast<int>(v));
        }
        if (out.empty()) throw invalid_input("degree sequence must be nonempty");
        return DegreeSequence(std::move(out));
    }

    std::size_t m() const { return d_.size(); }
    int operator[](std::size_t i) const { return d_[i]; } // 0-based
    int front() const { return d_.front(); }
    int back() const { return d_.back(); }

    long long edges() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

    const std::vector<int>& values() const { return d_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < d_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(d_[i]);
        }
        return s;
    }

    friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) { return a.d_ == b.d_; }
    friend bool operator!=(const DegreeSequence& a, const DegreeSequence& b) { return !(a == b); }
    // Lexicographic on the sorted values; gives enumerations a stable order.
    friend bool operator<(const DegreeSequence& a, const DegreeSequence& b) { return a.d_ < b.d_; }

  private:
    std::vector<int> d_;
};

// Strict dominance D > E: at least as many entries, componentwise >= on the
// shared prefix, and not equal as multisets.  Extra entries of D (beyond
// E's length) are unconstrained beyond positivity.
inline bool dominates(const DegreeSequence& d, const DegreeSequence& e) {
    if (d.m() < e.m()) return false;
    for (std::size_t i = 0; i < e.m(); ++i)
        if (d[i] < e[i]) return false;
    return d != e;
}

} // namespace chainspec
