#include "ordspace/descriptor.hpp"
#include "ordspace/exact_arith.hpp"
#include "ordspace/oracle.hpp"
#include "ordspace/order_space.hpp"
#include "ordspace/random.hpp"

#include <benchmark/benchmark.h>

using namespace ordspace;

static void BM_Multiply(benchmark::State& state)
{
    const Group G(static_cast<int>(state.range(0)));
    Sampler rng(1);
    ElementSpec spec;
    spec.max_support = 6;
    std::vector<GroupElement> xs;
    for (int k = 0; k < 256; ++k)
        xs.push_back(rng.element(G, spec));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(G.multiply(xs[k % 256], xs[(k + 1) % 256]));
        ++k;
    }
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4);

static void BM_SignOf(benchmark::State& state)
{
    const Group G(3);
    Sampler rng(2);
    const OrderOracle o(G, rng.descriptor(3, 2));
    ElementSpec spec;
    spec.p_only = 1.0;
    std::vector<GroupElement> xs;
    for (int k = 0; k < 256; ++k)
        xs.push_back(rng.element(G, spec));
    std::size_t k = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(o.sign_of(xs[k++ % 256]));
}
BENCHMARK(BM_SignOf);

static void BM_LinearCombSign(benchmark::State& state)
{
    std::vector<PowerTerm> terms;
    Sampler rng(3);
    for (int k = 0; k < state.range(0); ++k)
        terms.push_back({rng.rational(50), rng.unit_dyadic(8)});
    for (auto _ : state)
        benchmark::DoNotOptimize(linear_comb_sign(3, terms));
}
BENCHMARK(BM_LinearCombSign)->Arg(2)->Arg(8)->Arg(32);

static void BM_Enumerate(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(3, state.range(0)));
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CbModel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(cb_model(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CbModel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
