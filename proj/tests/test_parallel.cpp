#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "grat/gseq.hpp"
#include "grat/hilbert.hpp"
#include "grat/measure.hpp"
#include "grat/parallel.hpp"

using namespace grat;
using namespace grat::parallel;

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> zs(count);
    for (int i = 0; i < count; ++i)
        zs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return zs;
}

}  // namespace

TEST_CASE("curve evaluation matches the serial reference bitwise") {
    auto zs = log_grid(0.26, 100.0, 1777);
    for (int n : {0, 1, 7, 40}) {
        auto a = eval_curve_serial(n, zs);
        auto b = eval_curve(n, zs);
        REQUIRE(a.size() == zs.size());
        REQUIRE(b.size() == zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i) {
            CHECK(a[i] == b[i]);
            CHECK(a[i] == gseq::g_fun_eval(n, zs[i]));
        }
    }
}

TEST_CASE("gram matrix agrees with pairwise inner products") {
    auto rule = measure::build_quadrature(48);
    const int K = 10;
    auto serial = gram_matrix_serial(K, rule);
    auto par = gram_matrix(K, rule);
    REQUIRE(serial.size() == (K + 1) * (K + 1));
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == par[i]);
    for (int m = 0; m <= K; ++m) {
        for (int n = 0; n <= K; ++n) {
            double direct = hilbert::inner_product(
                [m](double z) { return gseq::g_fun_eval(2 * m, z); },
                [n](double z) { return gseq::g_fun_eval(2 * n, z); }, rule);
            CHECK(std::fabs(serial[m * (K + 1) + n] - direct) < 1e-13);
            CHECK(serial[m * (K + 1) + n] == serial[n * (K + 1) + m]);
        }
    }
}

TEST_CASE("batched projection agrees with the single-function path") {
    auto rule = measure::build_quadrature(64);
    std::vector<double> f_at_nodes(rule.nodes.size());
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        f_at_nodes[k] = 1 / std::sqrt(rule.nodes[k]);
    const int N = 12;
    auto serial = fourier_batch_serial(f_at_nodes, N, rule);
    auto par = fourier_batch(f_at_nodes, N, rule);
    REQUIRE(serial.size() == N + 1);
    for (int n = 0; n <= N; ++n) CHECK(serial[n] == par[n]);
    auto reference = hilbert::fourier_coefficients(
        [](double z) { return 1 / std::sqrt(z); }, N, rule);
    for (int n = 0; n <= N; ++n)
        CHECK(std::fabs(serial[n] - reference.coeffs[n]) < 1e-13);
}

TEST_CASE("expansion curves match expansion_eval") {
    auto zs = log_grid(0.25, 40.0, 503);
    hilbert::FourierExpansion e{{0.3, -0.2, 0.05, 0.7}};
    auto serial = expansion_curve_serial(e, zs);
    auto par = expansion_curve(e, zs);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(serial[i] == par[i]);
        CHECK(std::fabs(serial[i] - hilbert::expansion_eval(e, zs[i])) < 1e-13);
    }
    CHECK(expansion_curve(hilbert::FourierExpansion{}, zs) ==
          std::vector<double>(zs.size(), 0.0));
}

TEST_CASE("invalid grids are rejected before any parallel work") {
    std::vector<double> bad = {0.5, 0.2, 1.0};
    CHECK_THROWS_AS(eval_curve(3, bad), std::domain_error);
    CHECK_THROWS_AS(eval_curve_serial(3, bad), std::domain_error);
    hilbert::FourierExpansion e{{1.0}};
    CHECK_THROWS_AS(expansion_curve(e, bad), std::domain_error);
    std::vector<double> f(4, 1.0);
    auto rule = measure::build_quadrature(8);
    CHECK_THROWS_AS(fourier_batch(f, 2, rule), std::invalid_argument);
}
