#include <benchmark/benchmark.h>

#include "lighthouse/arc.hpp"
#include "lighthouse/center.hpp"
#include "lighthouse/oracle.hpp"
#include "lighthouse/render.hpp"

using namespace lighthouse;

static void BM_apex_x_closed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(center::apex_x_closed(n));
}
BENCHMARK(BM_apex_x_closed)->Arg(3)->Arg(101)->Arg(1001);

static void BM_apex_x_geometric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(center::apex_x_geometric(n));
}
BENCHMARK(BM_apex_x_geometric)->Arg(3)->Arg(101);

static void BM_find_illuminator(benchmark::State& state) {
    const Scene scene = build_scene(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(arc::find_illuminator(scene));
}
BENCHMARK(BM_find_illuminator)->Arg(5)->Arg(20)->Arg(50);

static void BM_illuminator_scan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(arc::illuminator_scan(25));
}
BENCHMARK(BM_illuminator_scan)->Unit(benchmark::kMillisecond);

static void BM_estimate_center(benchmark::State& state) {
    const Scene scene = build_scene(3);
    const oracle::OracleConfig cfg;
    const double x = center::apex_x_closed(3);
    const double hint = std::sqrt(1.0 + x * x);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oracle::estimate_dark_area(scene, Variant::center, cfg, state.range(0), 42, hint));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_estimate_center)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_estimate_arc(benchmark::State& state) {
    const Scene scene = build_scene(4);
    const oracle::OracleConfig cfg;
    const double x = arc::apex_x_arc(4);
    const double hint = std::sqrt(1.0 + x * x);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oracle::estimate_dark_area(scene, Variant::arc, cfg, state.range(0), 42, hint));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_estimate_arc)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_render(benchmark::State& state) {
    const Scene scene = build_scene(5);
    RenderOptions opts;
    opts.variant = Variant::arc;
    const auto [k, sol] = arc::find_illuminator(scene);
    const GoverningRay ray{sol.emission, sol.tangency, sol.apex};
    for (auto _ : state) benchmark::DoNotOptimize(render_scene(scene, opts, ray));
}
BENCHMARK(BM_render);

BENCHMARK_MAIN();
