#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "grat/basisops.hpp"
#include "grat/exactseq.hpp"
#include "grat/measure.hpp"

using namespace grat;
using namespace grat::basisops;

TEST_CASE("power-to-basis expansion coefficients") {
    CHECK(power_to_g(0) == std::vector<ExactInteger>{1});
    CHECK(power_to_g(1) == std::vector<ExactInteger>{1, 1});
    CHECK(power_to_g(3) == std::vector<ExactInteger>{5, 9, 5, 1});
}

TEST_CASE("power expansion reproduces z^{-n} exactly") {
    for (int n = 0; n <= 12; ++n) {
        auto c = power_to_g(n);
        for (int zi = 2; zi <= 5; ++zi) {
            ExactRational z(zi);
            ExactRational acc = 0;
            for (int l = 0; l <= n; ++l)
                acc += ExactRational(c[l]) * g_even_exact(l, z);
            CHECK(acc == rational_pow(z, -n));
        }
    }
}

TEST_CASE("transition matrix entries at order 5") {
    auto [A, B] = transition_matrices(5);
    const ExactInteger a5[5][5] = {{1, 0, 0, 0, 0},
                                   {-1, 1, 0, 0, 0},
                                   {1, -3, 1, 0, 0},
                                   {-1, 6, -5, 1, 0},
                                   {1, -10, 15, -7, 1}};
    const ExactInteger b5[5][5] = {{1, 0, 0, 0, 0},
                                   {1, 1, 0, 0, 0},
                                   {2, 3, 1, 0, 0},
                                   {5, 9, 5, 1, 0},
                                   {14, 28, 20, 7, 1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CHECK(A.at(i, j) == a5[i][j]);
            CHECK(B.at(i, j) == b5[i][j]);
        }
    CHECK_THROWS_AS(A.at(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(A.at(0, -1), std::invalid_argument);
}

TEST_CASE("transition matrices are mutually inverse") {
    for (int n : {1, 2, 3, 8, 16}) {
        auto [A, B] = transition_matrices(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) {
                ExactInteger acc = 0;
                for (int k = j; k <= i; ++k) acc += A.at(i, k) * B.at(k, j);
                CHECK(acc == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("rows of B agree with the power expansion") {
    auto [A, B] = transition_matrices(11);
    (void)A;
    for (int m = 0; m <= 10; ++m) {
        auto c = power_to_g(m);
        for (int l = 0; l <= m; ++l) CHECK(B.at(m, l) == c[l]);
    }
}

TEST_CASE("first column of B counts balanced sequences") {
    auto [A, B] = transition_matrices(12);
    (void)A;
    ExactInteger catalan = 1;  // C_0
    for (int i = 0; i < 12; ++i) {
        CHECK(B.at(i, 0) == catalan);
        catalan *= 2 * (2 * i + 1);
        mpz_divexact_ui(catalan.get_mpz_t(), catalan.get_mpz_t(), i + 2);
    }
}

TEST_CASE("four-term binomial identity") {
    CHECK(pascal_identity_check(7, 3));
    CHECK(pascal_identity_check(3, 3));
    for (int n = 3; n <= 40; ++n)
        for (int m = 3; m <= n; ++m) CHECK(pascal_identity_check(n, m));
    CHECK_THROWS_AS(pascal_identity_check(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(pascal_identity_check(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(pascal_identity_check(4, 5), std::invalid_argument);
}

TEST_CASE("exact even-index values") {
    CHECK(g_even_exact(0, ExactRational(7)) == 1);
    CHECK(g_even_exact(1, ExactRational(2)) == ExactRational(-1, 2));
    CHECK(g_even_exact(3, ExactRational(1, 4)) == 7);
    // matches the scaled polynomial route at integer z
    for (int l = 0; l <= 10; ++l) {
        for (int zi = 1; zi <= 4; ++zi) {
            ExactRational z(zi);
            ExactRational scaled =
                exactseq::g_poly_eval(2 * l, z, exactseq::EvalMethod::recurrence) /
                rational_pow(z, l);
            CHECK(g_even_exact(l, z) == scaled);
        }
    }
    CHECK_THROWS_AS(g_even_exact(2, ExactRational(0)), std::domain_error);
}

TEST_CASE("even-index step-two recurrence holds exactly") {
    for (int zi = 0; zi < 4; ++zi) {
        ExactRational z(3 + zi, 1 + zi);  // 3, 2, 5/3, 3/2
        z.canonicalize();
        ExactRational step = ExactRational(1) / z - 2;
        for (int l = 0; l <= 12; ++l) {
            CHECK(g_even_exact(l + 2, z) ==
                  step * g_even_exact(l + 1, z) - g_even_exact(l, z));
        }
    }
}

TEST_CASE("orthogonalizing the power basis recovers the family") {
    auto rule = measure::build_quadrature(64);
    auto dev = gram_schmidt_verify(8, rule);
    REQUIRE(dev.size() == 9);
    CHECK(dev[0] < 1e-12);
    CHECK(dev[1] < 1e-10);
    for (double d : dev) CHECK(d < 1e-8);
}

TEST_CASE("interpolation") {
    SUBCASE("constant data means a single basis function") {
        InterpolationProblem p;
        p.nodes = {ExactRational(1), ExactRational(2), ExactRational(3), ExactRational(4)};
        p.values = {1, 1, 1, 1};
        CHECK(interpolate(p) ==
              std::vector<ExactRational>{1, 0, 0, 0});
    }

    SUBCASE("samples of one family member are reproduced") {
        InterpolationProblem p;
        p.nodes = {ExactRational(1), ExactRational(2), ExactRational(3), ExactRational(4)};
        for (auto& z : p.nodes) p.values.push_back(g_even_exact(2, z));
        CHECK(interpolate(p) == std::vector<ExactRational>{0, 0, 1, 0});
    }

    SUBCASE("frozen four-point solution") {
        InterpolationProblem p;
        p.nodes = {ExactRational(1), ExactRational(2), ExactRational(3),
                   ExactRational(4)};
        p.values = {ExactRational(2), ExactRational(1), ExactRational(3, 2),
                    ExactRational(1)};
        auto c = interpolate(p);
        REQUIRE(c.size() == 4);
        CHECK(c[0] == ExactRational(811, 6));
        CHECK(c[1] == ExactRational(1097, 4));
        CHECK(c[2] == ExactRational(1147, 6));
        CHECK(c[3] == ExactRational(58));
    }

    SUBCASE("random data interpolates with zero residual") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> num(1, 40), den(1, 8), val(-50, 50);
        for (int trial = 0; trial < 20; ++trial) {
            InterpolationProblem p;
            int k = 2 + trial % 5;
            while (static_cast<int>(p.nodes.size()) < k) {
                ExactRational z(num(rng), den(rng));
                z.canonicalize();
                if (std::find(p.nodes.begin(), p.nodes.end(), z) != p.nodes.end())
                    continue;
                p.nodes.push_back(z);
                ExactRational v(val(rng), den(rng));
                v.canonicalize();
                p.values.push_back(v);
            }
            auto c = interpolate(p);
            for (int j = 0; j < k; ++j) {
                ExactRational acc = 0;
                for (int l = 0; l < k; ++l)
                    acc += c[l] * g_even_exact(l, p.nodes[j]);
                CHECK(acc == p.values[j]);
            }
        }
    }

    SUBCASE("bad inputs") {
        InterpolationProblem dup;
        dup.nodes = {ExactRational(1), ExactRational(1)};
        dup.values = {1, 2};
        CHECK_THROWS_AS(interpolate(dup), std::invalid_argument);

        InterpolationProblem zero;
        zero.nodes = {ExactRational(0), ExactRational(1)};
        zero.values = {1, 2};
        CHECK_THROWS_AS(interpolate(zero), std::invalid_argument);

        InterpolationProblem mismatched;
        mismatched.nodes = {ExactRational(1)};
        mismatched.values = {1, 2};
        CHECK_THROWS_AS(interpolate(mismatched), std::invalid_argument);

        CHECK_THROWS_AS(interpolate(InterpolationProblem{}), std::invalid_argument);
    }
}
