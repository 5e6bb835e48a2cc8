#include <benchmark/benchmark.h>

#include "finv/divcong.hpp"
#include "finv/flag_cohomology.hpp"
#include "finv/linalg.hpp"
#include "finv/modforms.hpp"

namespace {

using finv::FilteredElement;
using finv::Int;
using finv::Level;
using finv::ModularForm;
using finv::QSeries;
using finv::Rational;

void BM_SeriesMultiply(benchmark::State& state) {
    int prec = static_cast<int>(state.range(0));
    QSeries a = finv::level_generator(Level::three, finv::GeneratorName::e1, prec);
    QSeries b = finv::level_generator(Level::three, finv::GeneratorName::e3, prec);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(64)->Arg(128)->Arg(256);

void BM_EisensteinExpansion(benchmark::State& state) {
    int prec = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(finv::eisenstein_G(14, prec));
}
BENCHMARK(BM_EisensteinExpansion)->Arg(64)->Arg(256);

void BM_EmbedLevel1(benchmark::State& state) {
    QSeries e4 = finv::eisenstein_E(4, 64);
    for (auto _ : state)
        benchmark::DoNotOptimize(finv::embed_level1(e4, 4, Level::three, 32));
}
BENCHMARK(BM_EmbedLevel1);

void BM_IndeterminacyVerdict(benchmark::State& state) {
    // The order-2 filtration-8 class; every iteration re-runs the verdict at
    // P and 2P (the verdict itself is cached nowhere, only the lattice is).
    ModularForm e4 = finv::embed_level1(finv::eisenstein_E(4, 24), 4, Level::three, 20);
    ModularForm u = (e4 - ModularForm::constant(Level::three, 1)) / Rational(240);
    FilteredElement h(8, u * u * Rational(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(finv::in_indeterminacy(h));
}
BENCHMARK(BM_IndeterminacyVerdict);

void BM_CoinvariantReduce(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int dim = n * (n - 1) / 2;
    finv::CoinvariantPoly p =
        finv::CoinvariantPoly::variable(n, 1).pow(static_cast<unsigned>(dim));
    for (auto _ : state) benchmark::DoNotOptimize(p.reduce());
}
BENCHMARK(BM_CoinvariantReduce)->Arg(4)->Arg(5);

void BM_HermiteNormalForm(benchmark::State& state) {
    // Fixed pseudo-random integer rows; the congruence lattice work is
    // dominated by exactly this shape of reduction.
    int rows = 24, cols = 40;
    finv::linalg::ZMatrix m(rows, std::vector<Int>(cols));
    std::uint64_t x = 88172645463325252ull;
    for (auto& row : m)
        for (Int& v : row) {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            v = Int(static_cast<long>(x % 2001) - 1000);
        }
    for (auto _ : state) benchmark::DoNotOptimize(finv::linalg::hnf(m));
}
BENCHMARK(BM_HermiteNormalForm);

}  // namespace

BENCHMARK_MAIN();
