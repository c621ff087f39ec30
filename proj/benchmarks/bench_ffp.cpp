#include "ffp/finfree.hpp"
#include "ffp/immanant.hpp"
#include "ffp/oracle.hpp"
#include "ffp/symgroup.hpp"
#include "ffp/weingarten.hpp"

#include <benchmark/benchmark.h>

using namespace ffp;

namespace {

Spectrum spectrum_of(int d) {
    std::vector<long> v;
    for (int i = 0; i < d; ++i) v.push_back((i * 7) % 5 - 2);
    return Spectrum::from_ints(v);
}

RationalMatrix matrix_of(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (3 * i + 5 * j) % 7 - 3;
    return m;
}

void BM_CharacterTable(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Integer sum = 0;
        for (const auto& lambda : partitions_of(k))
            for (const auto& rho : partitions_of(k)) sum += character_uncached(lambda, rho);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 10, 2);

void BM_WeingartenUncachedGram(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weingarten_gram_oracle(k, 6));
}
BENCHMARK(BM_WeingartenUncachedGram)->DenseRange(1, 4);

void BM_ImmanantsDirect(benchmark::State& state) {
    const RationalMatrix y = matrix_of(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(immanants_direct_all(y));
}
BENCHMARK(BM_ImmanantsDirect)->DenseRange(3, 8);

void BM_ImmanantGouldenJackson(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RationalMatrix y = matrix_of(n);
    for (auto _ : state) benchmark::DoNotOptimize(immanant_gj(Partition::two_column(n, n / 2), y));
}
BENCHMARK(BM_ImmanantGouldenJackson)->DenseRange(2, 5);

void BM_CommutatorPoly(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const MonicPoly p = MonicPoly::from_spectrum(spectrum_of(d));
    for (auto _ : state) benchmark::DoNotOptimize(commutator_poly(p, p));
}
BENCHMARK(BM_CommutatorPoly)->RangeMultiplier(2)->Range(2, 32);

void BM_BruteForce(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const Spectrum a = spectrum_of(d);
    for (auto _ : state)
        for (int k = 0; k <= d; ++k) benchmark::DoNotOptimize(brute_force_expected_ek(a, a, k));
}
BENCHMARK(BM_BruteForce)->DenseRange(2, 4);

void BM_HaarSample(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    RandomStream stream(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(haar_sample(d, stream));
}
BENCHMARK(BM_HaarSample)->RangeMultiplier(2)->Range(2, 64);

void BM_McCommutator(benchmark::State& state) {
    const Spectrum a = spectrum_of(static_cast<int>(state.range(0)));
    McConfig cfg;
    cfg.samples = 10000;
    cfg.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(mc_commutator_charpoly(a, a, cfg));
}
BENCHMARK(BM_McCommutator)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
