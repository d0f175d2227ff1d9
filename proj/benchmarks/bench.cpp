#include <benchmark/benchmark.h>

#include <random>

#include "butson/conjecture.hpp"
#include "butson/cyclotomic.hpp"
#include "butson/matrices.hpp"
#include "butson/search.hpp"
#include "butson/spectra.hpp"

namespace {

using namespace butson;

CycInt random_cyc(std::mt19937_64& rng, unsigned order) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<BigInt> c(order);
    for (auto& x : c) x = coeff(rng);
    return CycInt(order, std::move(c));
}

void BM_CycIntMul(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto order = static_cast<unsigned>(state.range(0));
    const CycInt a = random_cyc(rng, order);
    const CycInt b = random_cyc(rng, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycIntMul)->Arg(12)->Arg(60);

void BM_CycIntIsZero(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const auto order = static_cast<unsigned>(state.range(0));
    const CycInt a = random_cyc(rng, order);
    const CycInt d = a - a.conj() * CycInt::root(order, 1);  // nonzero, needs reduction
    for (auto _ : state) benchmark::DoNotOptimize(d.is_zero());
}
BENCHMARK(BM_CycIntIsZero)->Arg(12)->Arg(60);

void BM_VanishingRootSum(benchmark::State& state) {
    // The canonical zero: all n-th roots summed, reduced mod Phi_n.
    const auto order = static_cast<unsigned>(state.range(0));
    CycInt sum(order);
    for (unsigned t = 0; t < order; ++t) sum = sum + CycInt::root(order, t);
    for (auto _ : state) benchmark::DoNotOptimize(sum.is_zero());
}
BENCHMARK(BM_VanishingRootSum)->Arg(30)->Arg(105);

void BM_VerifyBhFourier(benchmark::State& state) {
    const RootMatrix M = RootMatrix::fourier(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_bh(M).is_bh);
}
BENCHMARK(BM_VerifyBhFourier)->Arg(8)->Arg(16)->Arg(32);

void BM_Autocorrelation(benchmark::State& state) {
    const std::vector<unsigned> row{1, 3, 4, 4, 3};
    for (auto _ : state) benchmark::DoNotOptimize(autocorrelation_is_bh(5, row));
}
BENCHMARK(BM_Autocorrelation);

void BM_CanonicalRank(benchmark::State& state) {
    const std::vector<unsigned> row{1, 3, 4, 4, 3};
    for (auto _ : state) benchmark::DoNotOptimize(canonical_rank(5, row));
}
BENCHMARK(BM_CanonicalRank);

void BM_EigNumeric(benchmark::State& state) {
    const RootMatrix M = RootMatrix::fourier(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eig_numeric(M));
}
BENCHMARK(BM_EigNumeric)->Arg(8)->Arg(16)->Arg(32);

void BM_ExactSpectrum55(benchmark::State& state) {
    const auto M = builtin_examples().ex2;
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_report(M));
}
BENCHMARK(BM_ExactSpectrum55);

void BM_ConjectureTest55(benchmark::State& state) {
    const auto M = builtin_examples().ex2;
    for (auto _ : state) benchmark::DoNotOptimize(conjecture_test(M, 10));
}
BENCHMARK(BM_ConjectureTest55);

void BM_SearchSlice(benchmark::State& state) {
    SearchConfig cfg;
    cfg.m = 5;
    cfg.l = 5;
    cfg.range = std::make_pair<std::uint64_t, std::uint64_t>(
        0, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_search(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchSlice)->Arg(512)->Arg(3125);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
