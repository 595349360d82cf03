#include <benchmark/benchmark.h>

#include <complex>

#include "shen3/dn3.hpp"
#include "shen3/ramanujan.hpp"

namespace {

void BM_modulus_new(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(shen3::modulus_new(0.5));
    }
}
BENCHMARK(BM_modulus_new);

void BM_gauss_2f1(benchmark::State& state)
{
    const double z = state.range(0) / 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            shen3::hypergeo::gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, z}, {1e-15, 2000000}));
    }
}
BENCHMARK(BM_gauss_2f1)->Arg(50)->Arg(90)->Arg(99);

void BM_complete_K_agm(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(shen3::hypergeo::complete_K_agm(0.93301270));
    }
}
BENCHMARK(BM_complete_K_agm);

void BM_wp(benchmark::State& state)
{
    const auto mod = shen3::modulus_new(0.5);
    const std::complex<double> z{0.7, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(shen3::weierstrass::wp(z, mod.lattice, mod.invariants));
    }
}
BENCHMARK(BM_wp);

void BM_dn3_wp(benchmark::State& state)
{
    const auto mod = shen3::modulus_new(0.5);
    const std::complex<double> z{0.7, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(shen3::dn3_wp(z, mod));
    }
}
BENCHMARK(BM_dn3_wp);

void BM_dn3_direct(benchmark::State& state)
{
    const auto mod = shen3::modulus_new(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(shen3::dn3_direct(0.7, mod));
    }
}
BENCHMARK(BM_dn3_direct);

void BM_identity_5_6(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(shen3::ramanujan::verify_identity_5_6(0.5));
    }
}
BENCHMARK(BM_identity_5_6);

}  // namespace

BENCHMARK_MAIN();
