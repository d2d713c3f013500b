// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "recomp/lattes.hpp"
#include "recomp/modular.hpp"
#include "recomp/spectrum.hpp"

using namespace recomp;

namespace {

ExecPolicy policy_of(const benchmark::State& state) { return state.range(0) ? ExecPolicy::parallel : ExecPolicy::serial; }

std::vector<ComplexLD> random_coefficients(std::size_t degree) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<ComplexLD> c(degree + 1);
    for (auto& x : c) x = {u(rng), 0.0};
    c.back() = 1;
    return c;
}

void BM_AberthCoefficients(benchmark::State& state) {
    const auto c = random_coefficients(static_cast<std::size_t>(state.range(1)));
    const auto init = kernels::initial_approximations(c);
    const auto ratio = kernels::coefficient_ratio(c);
    for (auto _ : state) {
        auto roots = policy_of(state) == ExecPolicy::parallel ? kernels::aberth_parallel(init, ratio, 2000)
                                                              : kernels::aberth_serial(init, ratio, 2000);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_AberthCoefficients)->ArgsProduct({{0, 1}, {64, 256, 1024}})->Unit(benchmark::kMillisecond);

void BM_AberthPeriodic(benchmark::State& state) {
    const RatMap F = legendre_map(2).map;
    const int s = static_cast<int>(state.range(1));
    const auto div = periodic_divisor(F, s);
    std::vector<ComplexLD> c;
    for (long double x : div.finite_part.to_long_double()) c.emplace_back(x, 0.0L);
    const auto init = kernels::initial_approximations(c);
    const auto ratio = periodic_newton_ratio(F, s);
    for (auto _ : state) {
        auto roots = policy_of(state) == ExecPolicy::parallel ? kernels::aberth_parallel(init, ratio, 2000)
                                                              : kernels::aberth_serial(init, ratio, 2000);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_AberthPeriodic)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
    const RatMap F = legendre_map(Rational(-3, 7)).map;
    SpectrumOptions opts;
    opts.policy = policy_of(state);
    opts.roots.policy = policy_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(F, static_cast<int>(state.range(1)), opts));
}
BENCHMARK(BM_Spectrum)->ArgsProduct({{0, 1}, {3}})->Unit(benchmark::kMillisecond);

void BM_OrbitBfs(benchmark::State& state) {
    OrbitOptions opts;
    opts.policy = policy_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs(Scalar(Rational(1728)), static_cast<int>(state.range(1)), opts));
}
BENCHMARK(BM_OrbitBfs)->ArgsProduct({{0, 1}, {6}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
