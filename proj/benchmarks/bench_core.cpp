#include <benchmark/benchmark.h>

#include "mpg/canonical.hpp"
#include "mpg/chromatic.hpp"
#include "mpg/generate.hpp"
#include "mpg/named_graphs.hpp"

using namespace mpg;

static void BM_CanonicalForm(benchmark::State& state) {
    Graph g = stacked_triangulation(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16);

static void BM_CanonicalFormIcosahedron(benchmark::State& state) {
    Graph g = icosahedron();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormIcosahedron);

static void BM_ChromaticPolynomial(benchmark::State& state) {
    Graph g = stacked_triangulation(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) {
        ChromaticEngine engine({.use_memo = true, .use_separator = true});
        benchmark::DoNotOptimize(engine.polynomial(g));
    }
}
BENCHMARK(BM_ChromaticPolynomial)->Arg(8)->Arg(10)->Arg(12);

static void BM_ChromaticIcosahedron(benchmark::State& state) {
    Graph g = icosahedron();
    for (auto _ : state) {
        ChromaticEngine engine;
        benchmark::DoNotOptimize(engine.polynomial(g));
    }
}
BENCHMARK(BM_ChromaticIcosahedron);

static void BM_Generate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_all(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Generate)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
