// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "whichpath/kernels.hpp"

namespace {

using whichpath::kernels::cplx;

std::vector<cplx> random_vector(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (cplx& z : v) z = {u(rng), u(rng)};
    return v;
}

template <auto Fn>
void BM_inner(benchmark::State& state)
{
    const auto f = random_vector(static_cast<std::size_t>(state.range(0)), 1);
    const auto g = random_vector(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(f, g));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_multiply(benchmark::State& state)
{
    auto v = random_vector(static_cast<std::size_t>(state.range(0)), 3);
    const auto w = random_vector(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        Fn(v, w);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_qubit_gate(benchmark::State& state)
{
    const auto m = static_cast<unsigned>(state.range(0));
    auto amps = random_vector(std::size_t{1} << m, 5);
    const whichpath::kernels::Gate2 u{cplx{0.6, 0}, cplx{-0.8, 0}, cplx{0.8, 0}, cplx{0.6, 0}};
    for (auto _ : state) {
        for (unsigned q = 0; q < m; ++q) Fn(amps, q, u);
        benchmark::ClobberMemory();
    }
}

template <auto Fn>
void BM_joint_marginal(benchmark::State& state)
{
    const std::size_t n = 4096;
    const auto m = static_cast<unsigned>(state.range(0));
    const auto a = random_vector(n, 6);
    const auto b = random_vector(n, 7);
    const auto pa = random_vector(std::size_t{1} << m, 8);
    const auto pb = random_vector(std::size_t{1} << m, 9);
    std::vector<double> out(n);
    for (auto _ : state) {
        Fn(a, b, pa, pb, out);
        benchmark::ClobberMemory();
    }
}

namespace serial = whichpath::kernels::serial;
namespace parallel = whichpath::kernels::parallel;

BENCHMARK(BM_inner<serial::inner>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_inner<parallel::inner>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_multiply<serial::multiply>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_multiply<parallel::multiply>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_qubit_gate<serial::apply_qubit_gate>)->Arg(12)->Arg(20);
BENCHMARK(BM_qubit_gate<parallel::apply_qubit_gate>)->Arg(12)->Arg(20);
BENCHMARK(BM_joint_marginal<serial::joint_marginal>)->Arg(4)->Arg(8);
BENCHMARK(BM_joint_marginal<parallel::joint_marginal>)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
