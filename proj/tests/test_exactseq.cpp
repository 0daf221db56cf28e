#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "grat/exactseq.hpp"

using namespace grat;
using namespace grat::exactseq;

TEST_CASE("coefficient tables") {
    CHECK(g_poly_coeffs(0).coeffs == std::vector<ExactInteger>{1});
    CHECK(g_poly_coeffs(1).coeffs == std::vector<ExactInteger>{1});
    CHECK(g_poly_coeffs(4).coeffs == std::vector<ExactInteger>{1, -3, 1});
    CHECK(g_poly_coeffs(9).coeffs == std::vector<ExactInteger>{1, -8, 21, -20, 5});
}

TEST_CASE("coefficients satisfy the three-term recurrence") {
    for (int n = 2; n <= 64; ++n) {
        auto gn = g_poly_coeffs(n).coeffs;
        auto g1 = g_poly_coeffs(n - 1).coeffs;
        auto g2 = g_poly_coeffs(n - 2).coeffs;
        std::vector<ExactInteger> want(gn.size(), 0);
        for (std::size_t k = 0; k < g1.size(); ++k) want[k] += g1[k];
        for (std::size_t k = 0; k < g2.size(); ++k) want[k + 1] -= g2[k];
        CHECK(gn == want);
    }
}

TEST_CASE("exact evaluation methods agree") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    for (int trial = 0; trial < 20; ++trial) {
        ExactRational z(num(rng), den(rng));
        z.canonicalize();
        if (z == ExactRational(1, 4)) continue;
        for (int n = 0; n <= 30; n += 3) {
            ExactRational a = g_poly_eval(n, z, EvalMethod::recurrence);
            CHECK(a == g_poly_eval(n, z, EvalMethod::closed_form));
            CHECK(a == g_poly_eval(n, z, EvalMethod::char_roots));
        }
    }
}

TEST_CASE("float evaluation methods agree to 1e-10 relative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> zdist(0.26, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        double z = zdist(rng);
        for (int n = 0; n <= 30; ++n) {
            double a = g_poly_eval(n, z, EvalMethod::recurrence);
            double b = g_poly_eval(n, z, EvalMethod::char_roots);
            double c = g_poly_eval(n, z, EvalMethod::trig);
            double scale = std::max({1.0, std::fabs(a)});
            CHECK(std::fabs(a - b) / scale < 1e-10);
            CHECK(std::fabs(a - c) / scale < 1e-10);
        }
    }
}

TEST_CASE("values at distinguished points") {
    CHECK(g_poly_eval(17, ExactRational(0), EvalMethod::closed_form) == 1);
    CHECK(g_poly_eval(6, ExactRational(1, 4), EvalMethod::recurrence) ==
          ExactRational(7, 64));
    CHECK(g_poly_eval(10, ExactRational(-1), EvalMethod::char_roots) == 89);

    CHECK(g_poly_special(0, SpecialPoint::zero) == 1);
    CHECK(g_poly_special(6, SpecialPoint::quarter) == ExactRational(7, 64));
    CHECK(g_poly_special(9, SpecialPoint::quarter) == ExactRational(5, 256));
    CHECK(g_poly_special(10, SpecialPoint::minus_one) == 89);

    // Fibonacci against an independent integer recurrence
    ExactInteger f0 = 1, f1 = 1;
    CHECK(g_poly_special(0, SpecialPoint::minus_one) == f0);
    CHECK(g_poly_special(1, SpecialPoint::minus_one) == f1);
    for (int n = 2; n <= 30; ++n) {
        ExactInteger f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
        CHECK(g_poly_special(n, SpecialPoint::minus_one) == f2);
        CHECK(g_poly_eval(n, ExactRational(-1), EvalMethod::recurrence) == f2);
    }
}

TEST_CASE("scaled Chebyshev-U bridge") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> zdist(0.26, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        double z = zdist(rng);
        for (int n = 0; n <= 30; n += 2) {
            double lhs = std::pow(z, 0.5 * n) * chebyshev_u_eval(n, 1 / (2 * std::sqrt(z)));
            double rhs = g_poly_eval(n, z, EvalMethod::recurrence);
            CHECK(std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)) < 1e-10);
        }
    }
}

TEST_CASE("second-order ODE annihilates every G_n") {
    for (int n = 0; n <= 32; ++n) CHECK(g_ode_residual(n).is_zero());
}

TEST_CASE("chebyshev_u_eval") {
    for (int n : {0, 1, 5, 12}) CHECK(chebyshev_u_eval(n, 1.0) == doctest::Approx(n + 1));
    CHECK(chebyshev_u_eval(2, 0.5) == doctest::Approx(0.0));
    CHECK(chebyshev_u_eval(3, 0.5) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(chebyshev_u_eval(3, 1.5), std::domain_error);
    CHECK_THROWS_AS(chebyshev_u_eval(3, -1.0000001), std::domain_error);
}

TEST_CASE("characteristic root pair") {
    for (double z : {-1.0, 0.0, 0.2, 0.24}) {
        CharRoots r = char_roots(z);
        CHECK(r.s1 + r.s2 == doctest::Approx(1.0));
        CHECK(r.s1 * r.s2 == doctest::Approx(z).epsilon(1e-12));
    }
    CHECK_THROWS_AS(char_roots(0.25), std::domain_error);
    CHECK_THROWS_AS(char_roots(1.0), std::domain_error);
}

TEST_CASE("method domain errors") {
    CHECK_THROWS_AS(g_poly_eval(4, ExactRational(1, 4), EvalMethod::char_roots),
                    std::domain_error);
    CHECK_THROWS_AS(g_poly_eval(4, 0.25, EvalMethod::char_roots), std::domain_error);
    CHECK_THROWS_AS(g_poly_eval(4, ExactRational(2), EvalMethod::trig), std::domain_error);
    CHECK_THROWS_AS(g_poly_eval(4, 0.2, EvalMethod::trig), std::domain_error);
    CHECK_THROWS_AS(g_poly_coeffs(-1), std::domain_error);
}

TEST_CASE("exact polynomial arithmetic") {
    ExactPolynomial a({1, 2});       // 1 + 2z
    ExactPolynomial b({ExactRational(-1), ExactRational(0), ExactRational(3)});
    CHECK((a * b).coeffs() ==
          std::vector<ExactRational>{-1, -2, 3, 6});
    CHECK((a - a).is_zero());
    CHECK(a.derivative().coeffs() == std::vector<ExactRational>{2});
    CHECK(b.eval(2) == 11);
    CHECK(ExactPolynomial({0, 0, 0}).is_zero());
    CHECK(ExactPolynomial{}.degree() == -1);
}
