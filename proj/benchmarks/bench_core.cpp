#include <benchmark/benchmark.h>

#include "chiro/chirotope.hpp"
#include "chiro/classification.hpp"
#include "chiro/configuration.hpp"
#include "chiro/topology.hpp"

using namespace chiro;

static void BM_ClosedForm(benchmark::State& state) {
    const ParamPoint p = base_parameters();
    for (auto _ : state) benchmark::DoNotOptimize(closed_form(p));
}
BENCHMARK(BM_ClosedForm);

static void BM_ChirotopeOf(benchmark::State& state) {
    const auto c = closed_form(base_parameters());
    for (auto _ : state) benchmark::DoNotOptimize(chirotope_of(c));
}
BENCHMARK(BM_ChirotopeOf);

static void BM_Axiom3Check(benchmark::State& state) {
    const Chirotope chi = reference_chirotopes().zero;
    for (auto _ : state) benchmark::DoNotOptimize(axiom3_check(chi).pass());
}
BENCHMARK(BM_Axiom3Check);

static void BM_ClassifyChecked(benchmark::State& state) {
    const ParamPoint p{Rational(1, 4), Rational(1, 2), Rational(1, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(classify(p, ClassifyMode::checked));
}
BENCHMARK(BM_ClassifyChecked);

static void BM_ClassifyFast(benchmark::State& state) {
    const ParamPoint p{Rational(1, 4), Rational(1, 2), Rational(1, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(classify(p, ClassifyMode::fast));
}
BENCHMARK(BM_ClassifyFast);

static void BM_SampleGrid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const SampleGraph g = sample_grid({n}, Label::minus, ClassifyMode::fast);
        benchmark::DoNotOptimize(connected_components(g).count);
    }
}
BENCHMARK(BM_SampleGrid)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
