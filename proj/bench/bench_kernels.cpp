#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "grat/measure.hpp"
#include "grat/parallel.hpp"

namespace {

const std::vector<double>& wide_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> zs(200000);
        for (std::size_t i = 0; i < zs.size(); ++i)
            zs[i] = 0.26 * std::pow(1e3 / 0.26, static_cast<double>(i) / (zs.size() - 1));
        return zs;
    }();
    return grid;
}

const grat::measure::QuadratureRule& gram_rule() {
    static const auto rule = grat::measure::build_quadrature(256);
    return rule;
}

const grat::measure::QuadratureRule& batch_rule() {
    static const auto rule = grat::measure::build_quadrature(1024);
    return rule;
}

const std::vector<double>& batch_samples() {
    static const std::vector<double> fv = [] {
        const auto& rule = batch_rule();
        std::vector<double> v(rule.nodes.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = 1 / std::sqrt(rule.nodes[k]);
        return v;
    }();
    return fv;
}

// Fixtures are taken before the timed loop so one-time rule construction
// never lands inside a measurement.

void BM_eval_curve_serial(benchmark::State& state) {
    const auto& grid = wide_grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(grat::parallel::eval_curve_serial(512, grid));
}

void BM_eval_curve(benchmark::State& state) {
    const auto& grid = wide_grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(grat::parallel::eval_curve(512, grid));
}

void BM_gram_matrix_serial(benchmark::State& state) {
    const auto& rule = gram_rule();
    for (auto _ : state)
        benchmark::DoNotOptimize(grat::parallel::gram_matrix_serial(48, rule));
}

void BM_gram_matrix(benchmark::State& state) {
    const auto& rule = gram_rule();
    for (auto _ : state)
        benchmark::DoNotOptimize(grat::parallel::gram_matrix(48, rule));
}

void BM_fourier_batch_serial(benchmark::State& state) {
    const auto& rule = batch_rule();
    const auto& fv = batch_samples();
    for (auto _ : state)
        benchmark::DoNotOptimize(grat::parallel::fourier_batch_serial(fv, 256, rule));
}

void BM_fourier_batch(benchmark::State& state) {
    const auto& rule = batch_rule();
    const auto& fv = batch_samples();
    for (auto _ : state)
        benchmark::DoNotOptimize(grat::parallel::fourier_batch(fv, 256, rule));
}

}  // namespace

BENCHMARK(BM_eval_curve_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eval_curve)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_matrix_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_matrix)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fourier_batch_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fourier_batch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
