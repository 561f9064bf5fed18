#include "lawvere/universe/constructions.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lawvere;
using namespace lawvere::universe;

void BM_DecodeEncode(benchmark::State& state)
{
    unsigned long n = 0;
    for (auto _ : state) {
        Natural code(n++ % 1000000);
        benchmark::DoNotOptimize(encode(*decode(code)));
    }
}
BENCHMARK(BM_DecodeEncode);

void BM_CantorPair(benchmark::State& state)
{
    Natural a("123456789012345678901234567890");
    Natural b("987654321098765432109876543210");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor_unpair(cantor_pair(a, b)));
    }
}
BENCHMARK(BM_CantorPair);

// Fuel consumed per second on a program that never halts.
void BM_EvalOmega(benchmark::State& state)
{
    auto fuel = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(omega(), {0}, fuel));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fuel));
}
BENCHMARK(BM_EvalOmega)->Arg(10000)->Arg(1000000);

void BM_Quine(benchmark::State& state)
{
    auto q = quine();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(q, {0}, 1000000));
    }
}
BENCHMARK(BM_Quine);

void BM_RecursionFixedPoint(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(recursion_fixed_point(quine_transformer()));
    }
}
BENCHMARK(BM_RecursionFixedPoint);

void BM_HaltingMatrix(benchmark::State& state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounded_halting_matrix(n, 200));
    }
}
BENCHMARK(BM_HaltingMatrix)->Arg(16)->Arg(64);

} // namespace
