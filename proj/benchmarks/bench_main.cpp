#include "stargenus/fast_tests.hpp"
#include "stargenus/generators.hpp"
#include "stargenus/genus_solver.hpp"
#include "stargenus/surface_oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace stargenus;

SignedChordDiagram nonorientable_diagram(int chords, std::uint64_t seed)
{
    Rng rng(seed);
    SignedChordDiagram d;
    do
        d = random_chord_diagram(rng, chords, 0.5, true);
    while (source_sink_gate(d) == Orientability::Orientable);
    return d;
}

void BM_Rank(benchmark::State& state)
{
    const auto m = intersection_matrix(nonorientable_diagram(static_cast<int>(state.range(0)), 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(m.rank());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_GenusSpectrum(benchmark::State& state)
{
    const auto d = nonorientable_diagram(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(genus_spectrum(d).spectrum.size());
    state.counters["groups"] = static_cast<double>(d.groups().size());
}
BENCHMARK(BM_GenusSpectrum)->DenseRange(8, 24, 4)->Unit(benchmark::kMillisecond);

void BM_Rp2(benchmark::State& state)
{
    const auto d = nonorientable_diagram(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(rp2_embeddable(d).embeddable);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rp2)->RangeMultiplier(2)->Range(50, 1600)->Complexity(benchmark::oNSquared);

void BM_KleinMobius(benchmark::State& state)
{
    const auto d = nonorientable_diagram(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(klein_case_mobius(d).embeddable);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KleinMobius)->RangeMultiplier(2)->Range(50, 1600)->Complexity(benchmark::oNSquared);

void BM_Klein(benchmark::State& state)
{
    const auto d = nonorientable_diagram(static_cast<int>(state.range(0)), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(klein_embeddable(d).embeddable);
}
BENCHMARK(BM_Klein)->RangeMultiplier(2)->Range(50, 400);

void BM_CircuitAndExpansion(benchmark::State& state)
{
    Rng rng(6);
    const StarGraph g = random_star_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const auto c = build_rotating_splitting_circuit(g);
        benchmark::DoNotOptimize(expansion_of(g, c).diagram.size());
    }
}
BENCHMARK(BM_CircuitAndExpansion)->RangeMultiplier(4)->Range(4, 1024);

void BM_AtomSpectrum(benchmark::State& state)
{
    Rng rng(7);
    const StarGraph g = random_star_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(atom_spectrum(g).size());
}
BENCHMARK(BM_AtomSpectrum)->DenseRange(4, 12, 4);

} // namespace

BENCHMARK_MAIN();
