#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "helpers.hpp"

using namespace chainspec;

TEST_CASE("second compound of the 2,1 chain") {
    SecondCompound sc = second_compound(chain_matrix(DegreeSequence::parse("2,1")));
    REQUIRE(sc.row_pairs.size() == 1);
    REQUIRE(sc.col_pairs.size() == 1);
    REQUIRE(sc.at(0, 0) == -1);
}

TEST_CASE("second compound entries of chains lie in {0,-1}") {
    for (const DegreeSequence& d : testutil::all_degree_multisets(5, 6)) {
        BitMatrix a = chain_matrix(d);
        if (a.rows() < 2 || a.cols() < 2) continue;
        SecondCompound sc = second_compound(a);
        for (int v : sc.entries) REQUIRE((v == 0 || v == -1));
    }
}

TEST_CASE("second compound entries of arbitrary patterns lie in {-1,0,1}") {
    std::mt19937 g(3);
    for (int t = 0; t < 60; ++t) {
        BitMatrix a = testutil::random_pattern(g, 6, 6, 0.5);
        if (a.rows() < 2 || a.cols() < 2) continue;
        SecondCompound sc = second_compound(a);
        for (int v : sc.entries) REQUIRE((v >= -1 && v <= 1));
    }
}

TEST_CASE("second compound guards") {
    REQUIRE_THROWS_AS(second_compound(chain_matrix(DegreeSequence::parse("3"))), invalid_input);
    REQUIRE_THROWS_AS(second_compound(chain_matrix(DegreeSequence::parse("1,1"))), invalid_input);
    REQUIRE_THROWS_AS(second_compound(chain_matrix(DegreeSequence(std::vector<int>(64, 64)))),
                      resource_limit);
}

TEST_CASE("omega of the worked example is 90/7 and conjugates swap") {
    DegreeSequence d = DegreeSequence::parse("5,2,2,1");
    REQUIRE(omega(d) == Rational(90, 7));
    REQUIRE(omega_prime(d) == Rational(48, 5));
    REQUIRE(omega_star(d) == Rational(90, 7));

    DegreeSequence c = conjugate_degrees(d);
    REQUIRE(omega(c) == Rational(48, 5));
    REQUIRE(omega_prime(c) == Rational(90, 7));
    REQUIRE(omega_star(c) == Rational(90, 7));
}

TEST_CASE("omega vanishes exactly for complete profiles") {
    REQUIRE(omega(DegreeSequence::parse("4,4,4")) == Rational(0));
    REQUIRE(omega_prime(DegreeSequence::parse("4,4,4")) == Rational(0));
    REQUIRE(lambda_sq_upper_bound(12, Rational(0)) == Catch::Approx(12.0));
}

TEST_CASE("omega formula matches the materialized compound") {
    // Denominator counts nonzero columns of the compound of the
    // deduplicated (multiplicity-1) staircase; numerator weighs the
    // squared column masses of the full staircase by multiplicities.
    for (const FerrersProfile& p : testutil::all_profiles(3, 6, 2)) {
        if (p.h() < 2) continue;
        BitMatrix a = chain_matrix(p.degrees());
        if (a.rows() < 2 || a.cols() < 2) continue;
        SecondCompound sc = second_compound(a);
        // column mass: for pair of distinct blocks k<l the minor column
        // count with value -1 per row pair (one row in block k, one in l)
        // is r_l*(r_k - r_l); total squared mass summed with multiplicity
        // weights must equal the omega numerator.
        long long mass = 0;
        for (std::size_t rp = 0; rp < sc.row_pairs.size(); ++rp) {
            long long cnt = 0;
            for (std::size_t cp = 0; cp < sc.col_pairs.size(); ++cp)
                if (sc.at(rp, cp) != 0) ++cnt;
            mass += cnt * cnt;
        }
        long long num = 0;
        for (int k = 0; k < p.h(); ++k)
            for (int l = k + 1; l < p.h(); ++l) {
                long long t = static_cast<long long>(p.r[l]) * (p.r[k] - p.r[l]);
                num += static_cast<long long>(p.m[k]) * p.m[l] * t * t;
            }
        REQUIRE(mass == num);

        // nonzero-column count equals the omega denominator
        long long nz_cols = 0;
        for (std::size_t cp = 0; cp < sc.col_pairs.size(); ++cp) {
            bool nz = false;
            for (std::size_t rp = 0; rp < sc.row_pairs.size(); ++rp)
                if (sc.at(rp, cp) != 0) nz = true;
            if (nz) ++nz_cols;
        }
        long long den = 0;
        for (int k = 0; k + 1 < p.h(); ++k)
            den += static_cast<long long>(p.r[k + 1]) * (p.r[k] - p.r[k + 1]);
        REQUIRE(nz_cols == den);

        REQUIRE(omega(p) == Rational(num, den));
    }
}

TEST_CASE("omega never exceeds the top two singular value product") {
    for (const DegreeSequence& d : testutil::all_degree_multisets(5, 6)) {
        BitMatrix a = chain_matrix(d);
        auto [s1, s2] = sigma_pair(a);
        double prod = s1 * s1 * s2 * s2;
        REQUIRE(omega(d).to_double() <= prod + 1e-7);
        REQUIRE(omega_prime(d).to_double() <= prod + 1e-7);
        REQUIRE(omega_star(d) == chainspec::max(omega(d), omega_prime(d)));
    }
}

TEST_CASE("upper bound on lambda squared") {
    // exact for two-block chains
    DegreeSequence d = DegreeSequence::parse("5,5,4");
    double ub = lambda_sq_upper_bound(d.edges(), omega_star(d));
    REQUIRE(ub == Catch::Approx(7 + std::sqrt(41.0)).margin(1e-12));
    REQUIRE(omega_star(d) == Rational(8));

    // valid (with slack) on taller profiles
    for (const DegreeSequence& dd : testutil::all_degree_multisets(5, 6)) {
        double bound = lambda_sq_upper_bound(dd.edges(), omega_star(dd));
        double lam = sigma1(chain_matrix(dd));
        REQUIRE(lam * lam <= bound + 1e-9);
    }

    REQUIRE_THROWS_AS(lambda_sq_upper_bound(2, Rational(2)), numeric_domain);
}
