#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"

using namespace chainspec;

TEST_CASE("jacobi solves a 2x2 exactly") {
    SymMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    EigenDecomposition ed = jacobi_eigen(m);
    double lo = (3 - std::sqrt(5.0)) / 2, hi = (3 + std::sqrt(5.0)) / 2;
    REQUIRE(ed.values[0] == Catch::Approx(hi).epsilon(1e-13));
    REQUIRE(ed.values[1] == Catch::Approx(lo).epsilon(1e-13));
    // residual check M v = lambda v
    for (int k = 0; k < 2; ++k) {
        double r0 = 2 * ed.vectors[k][0] + ed.vectors[k][1] - ed.values[k] * ed.vectors[k][0];
        double r1 = ed.vectors[k][0] + ed.vectors[k][1] - ed.values[k] * ed.vectors[k][1];
        REQUIRE(std::abs(r0) < 1e-12);
        REQUIRE(std::abs(r1) < 1e-12);
    }
}

TEST_CASE("jacobi handles diagonal and zero matrices") {
    SymMatrix d(3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 5;
    d.at(2, 2) = 3;
    std::vector<double> ev = jacobi_eigenvalues(d);
    REQUIRE(ev == std::vector<double>{5, 3, 1});

    SymMatrix z(2);
    REQUIRE(jacobi_eigenvalues(z) == std::vector<double>{0, 0});
}

TEST_CASE("jacobi residuals on random symmetric matrices") {
    std::mt19937 g(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(g() % 7);
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = u(g);
        EigenDecomposition ed = jacobi_eigen(m);
        for (std::size_t k = 0; k + 1 < ed.values.size(); ++k)
            REQUIRE(ed.values[k] >= ed.values[k + 1]);
        for (int k = 0; k < n; ++k) {
            double norm = 0;
            for (int i = 0; i < n; ++i) {
                double r = -ed.values[static_cast<std::size_t>(k)] * ed.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                for (int j = 0; j < n; ++j)
                    r += m.at(i, j) * ed.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                norm += r * r;
            }
            REQUIRE(std::sqrt(norm) < 1e-10 * (1 + m.frobenius_norm()));
        }
    }
}

TEST_CASE("sigma1 of the smallest noncomplete chain") {
    // Gram of the 2,1 chain is [[2,1],[1,1]]; its top eigenvalue is
    // (3+sqrt(5))/2, so sigma1 is the golden ratio.
    double expect = std::sqrt((3 + std::sqrt(5.0)) / 2);
    REQUIRE(sigma1(chain_matrix(DegreeSequence::parse("2,1"))) ==
            Catch::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sigma1 squared of the 5,5,4 chain is 7+sqrt(41)") {
    double s = sigma1(chain_matrix(DegreeSequence::parse("5,5,4")));
    REQUIRE(s * s == Catch::Approx(7 + std::sqrt(41.0)).margin(1e-9));
}

TEST_CASE("sigma pair and rank-1 patterns") {
    BitMatrix ones = chain_matrix(DegreeSequence::parse("4,4,4"));
    auto [s1, s2] = sigma_pair(ones);
    REQUIRE(s1 == Catch::Approx(std::sqrt(12.0)).epsilon(1e-12));
    REQUIRE(s2 < 1e-7);

    auto [t1, t2] = sigma_pair(chain_matrix(DegreeSequence::parse("5,5,4")));
    REQUIRE(t1 * t1 == Catch::Approx(7 + std::sqrt(41.0)).margin(1e-9));
    REQUIRE(t2 * t2 == Catch::Approx(7 - std::sqrt(41.0)).margin(1e-9));
}

TEST_CASE("sqrt-e bound with equality exactly on complete patterns") {
    std::mt19937 g(17);
    for (int t = 0; t < 300; ++t) {
        BitMatrix a = t % 50 == 0 ? chain_matrix(DegreeSequence(std::vector<int>(
                                        1 + t / 50, 1 + static_cast<int>(g() % 5))))
                                  : testutil::random_pattern(g, 7, 7, 0.3 + 0.2 * (t % 3));
        SpectralSummary s = spectral_summary(a);
        REQUIRE(s.sqrt_e_gap >= -1e-9);
        REQUIRE(s.at_sqrt_e == s.complete);
        REQUIRE(sqrt_e_gap(a) == Catch::Approx(s.sqrt_e_gap).margin(1e-12));
    }
}

TEST_CASE("sigma1 is transpose invariant and compatible with sigma2") {
    std::mt19937 g(23);
    for (int t = 0; t < 200; ++t) {
        BitMatrix a = testutil::random_pattern(g, 7, 7, 0.5);
        double s = sigma1(a), st = sigma1(a.transposed());
        REQUIRE(s == Catch::Approx(st).margin(1e-10));
        auto [s1, s2] = sigma_pair(a);
        REQUIRE(s1 * s1 + s2 * s2 <= static_cast<double>(a.ones()) + 1e-9);
        REQUIRE(s2 <= s1 + 1e-12);
    }
}

TEST_CASE("bipartite adjacency spectrum is sign symmetric") {
    std::mt19937 g(31);
    for (int t = 0; t < 30; ++t) {
        BitMatrix a = testutil::random_pattern(g, 4, 4, 0.5);
        std::vector<double> ev = adjacency_eigenvalues(a);
        REQUIRE(ev.size() == static_cast<std::size_t>(a.rows() + a.cols()));
        for (std::size_t i = 0; i < ev.size(); ++i)
            REQUIRE(ev[i] == Catch::Approx(-ev[ev.size() - 1 - i]).margin(1e-9));
        REQUIRE(ev.front() == Catch::Approx(sigma1(a)).margin(1e-10));
    }
}

TEST_CASE("dominant left vector of a chain is positive and nonincreasing") {
    for (const char* s : {"5,2,2,1", "5,5,4", "4,3,2,1", "6,1"}) {
        DegreeSequence d = DegreeSequence::parse(s);
        std::vector<double> v = dominant_left_vector(chain_matrix(d));
        for (std::size_t i = 0; i < v.size(); ++i) {
            REQUIRE(v[i] > 0);
            if (i) REQUIRE(v[i] <= v[i - 1] + 1e-12);
        }
    }
}

TEST_CASE("spectral ops reject the zero pattern") {
    BitMatrix z(2, 2);
    REQUIRE_THROWS_AS(sigma1(z), invalid_input);
    REQUIRE_THROWS_AS(sigma_pair(z), invalid_input);
}
