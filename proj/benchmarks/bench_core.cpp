#include <benchmark/benchmark.h>

#include "stratkit/corpus.hpp"
#include "stratkit/homology.hpp"
#include "stratkit/identities.hpp"
#include "stratkit/links.hpp"
#include "stratkit/ordered_complex.hpp"
#include "stratkit/subdivision.hpp"

using namespace stratkit;

static void BM_SdPSimplex(benchmark::State& state) {
    PosetPtr p = chain3();
    Flag j(state.range(0), 0);
    for (size_t i = 0; i < j.size(); ++i) j[i] = static_cast<int>(i * 3 / j.size());
    for (auto _ : state) {
        SdPCache cache(p);
        benchmark::DoNotOptimize(cache.simplex(j).complex.set().size());
    }
}
BENCHMARK(BM_SdPSimplex)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Identities(benchmark::State& state) {
    PosetPtr p = chain3();
    for (auto _ : state) benchmark::DoNotOptimize(verify_identities(p, static_cast<int>(state.range(0))).failures());
}
BENCHMARK(BM_Identities)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_HomologyOfSubdividedTorus(benchmark::State& state) {
    OrderedComplex circle(3, {{0, 1}, {0, 2}, {1, 2}});
    SimplicialSet torus = sd(product(circle.set(), circle.set()).set).set;
    for (auto _ : state) benchmark::DoNotOptimize(homology(torus, 2).betti);
}
BENCHMARK(BM_HomologyOfSubdividedTorus)->Unit(benchmark::kMillisecond);

static void BM_HolinkOfCylinder(benchmark::State& state) {
    PosetPtr p = chain3();
    StratifiedSet cyl = standard_corpus(p).back().set;
    for (auto _ : state) benchmark::DoNotOptimize(holink(cyl, {0, 1}, static_cast<int>(state.range(0))).set().size());
}
BENCHMARK(BM_HolinkOfCylinder)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_StratifiedSubdivisionOfCorpus(benchmark::State& state) {
    PosetPtr p = chain3();
    auto corpus = standard_corpus(p);
    for (auto _ : state) {
        SdPCache cache(p);
        for (const auto& e : corpus) benchmark::DoNotOptimize(sd_p(e.set, cache).set.size());
    }
}
BENCHMARK(BM_StratifiedSubdivisionOfCorpus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
