#include "morselab/calculus.hpp"
#include "morselab/canonical.hpp"
#include "morselab/census.hpp"
#include "morselab/collapse.hpp"
#include "morselab/constructions.hpp"
#include "morselab/generators.hpp"
#include "morselab/homology.hpp"
#include "morselab/lc.hpp"
#include "morselab/morse.hpp"
#include "morselab/subdivide.hpp"

#include <benchmark/benchmark.h>

using namespace morselab;

namespace {

void face_lattice(benchmark::State& state)
{
    const auto k = stacked_sphere(3, static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(face_poset(k));
    state.SetComplexityN(static_cast<long>(k.facet_count()));
}
BENCHMARK(face_lattice)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void integral_homology(benchmark::State& state)
{
    const auto k = pile_of_cubes(static_cast<int>(state.range(0)), 3, 3).triangulation;
    for (auto _ : state) benchmark::DoNotOptimize(homology::homology(k));
}
BENCHMARK(integral_homology)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void greedy_matching(benchmark::State& state)
{
    const auto p = share(face_poset(stacked_ball(3, static_cast<int>(state.range(0)), 2)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(morse::greedy_morse_matching(p, &rng));
    }
}
BENCHMARK(greedy_matching)->RangeMultiplier(4)->Range(8, 512);

void boundary_critical(benchmark::State& state)
{
    const auto p = share(face_poset(pile_of_cubes(static_cast<int>(state.range(0)), 3, 3).triangulation));
    const int delta = p->cells_of_dim(3).front();
    for (auto _ : state) benchmark::DoNotOptimize(morse::boundary_critical_morse(p, delta));
}
BENCHMARK(boundary_critical)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void endo_collapse_sphere(benchmark::State& state)
{
    const auto sphere = stacked_sphere(3, static_cast<int>(state.range(0)), 3);
    const auto p = share(face_poset(sphere));
    const auto info = morse::topology_info(sphere);
    for (auto _ : state) benchmark::DoNotOptimize(morse::is_endo_collapsible(p, info));
}
BENCHMARK(endo_collapse_sphere)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void pile_collapse_depth(benchmark::State& state)
{
    const auto pile = pile_of_cubes(3, 3, 3, {{1, 1, 1}}).triangulation;
    const auto p = share(face_poset(pile));
    const auto info = morse::topology_info(pile);
    for (auto _ : state) benchmark::DoNotOptimize(morse::collapse_depth(p, info));
}
BENCHMARK(pile_collapse_depth)->Unit(benchmark::kMillisecond);

void subdivision_transfer(benchmark::State& state)
{
    const auto ball = stacked_ball(3, static_cast<int>(state.range(0)), 4);
    const auto p = share(face_poset(ball));
    const auto f = calculus::pin_critical(p, p->cells_of_dim(3).front());
    for (auto _ : state) benchmark::DoNotOptimize(calculus::subdivide_morse(ball, f, calculus::Transfer::bc_to_plain));
}
BENCHMARK(subdivision_transfer)->DenseRange(1, 9, 4)->Unit(benchmark::kMillisecond);

void canonical_labeling(benchmark::State& state)
{
    const auto k = stacked_sphere(3, static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(k));
}
BENCHMARK(canonical_labeling)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMicrosecond);

void lc_round_trip(benchmark::State& state)
{
    const auto sphere = stacked_sphere(3, static_cast<int>(state.range(0)), 6);
    const auto p = share(face_poset(sphere));
    const auto f = calculus::pin_critical(p, p->cells_of_dim(3).front());
    for (auto _ : state) {
        const auto dis = lc::lc_disassemble(sphere, f);
        benchmark::DoNotOptimize(lc::lc_assemble(dis.tree, dis.script));
    }
}
BENCHMARK(lc_round_trip)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void tree_census(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(lc::enumerate_trees(3, static_cast<int>(state.range(0))));
}
BENCHMARK(tree_census)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
