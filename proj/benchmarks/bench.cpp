// benchmarks: Delaunay filtration, reduction variants, flows, minimal cycles
#include <benchmark/benchmark.h>

#include <wrapser/flow.hpp>
#include <wrapser/geometry.hpp>
#include <wrapser/morse.hpp>
#include <wrapser/pipeline.hpp>
#include <wrapser/reduction.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace wrapser;

namespace {

// deterministic jittered sphere/circle sample, coordinates on a 1e-6 grid
PointCloud sphere_points(index_t n, int dim, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> radial(0.99, 1.01);
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) {
        std::vector<double> p(static_cast<std::size_t>(dim));
        double norm2 = 0;
        do {
            norm2 = 0;
            for (double& c : p) {
                c = gauss(rng);
                norm2 += c * c;
            }
        } while (norm2 < 1e-12);
        double s = radial(rng) / std::sqrt(norm2);
        for (double& c : p) c = std::round(c * s * 1e6) / 1e6;
        rows.push_back(std::move(p));
    }
    return PointCloud::from_doubles(rows, false);
}

std::shared_ptr<const ElementwiseFiltration> sphere_filtration(index_t n, int dim) {
    return std::make_shared<ElementwiseFiltration>(
        delaunay_radius_filtration(sphere_points(n, dim, 20240 + static_cast<unsigned>(n))));
}

}  // namespace

static void BM_DelaunayFiltration(benchmark::State& state) {
    PointCloud X = sphere_points(static_cast<index_t>(state.range(0)), 3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(delaunay_radius_filtration(X));
}
BENCHMARK(BM_DelaunayFiltration)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_StandardReduce(benchmark::State& state) {
    auto filt = sphere_filtration(static_cast<index_t>(state.range(0)), 3);
    PrimeField F(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(standard_reduce(filt, F, /*apparent_shortcut=*/false));
}
BENCHMARK(BM_StandardReduce)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_StandardReduceShortcut(benchmark::State& state) {
    auto filt = sphere_filtration(static_cast<index_t>(state.range(0)), 3);
    PrimeField F(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(standard_reduce(filt, F, /*apparent_shortcut=*/true));
}
BENCHMARK(BM_StandardReduceShortcut)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveReduce(benchmark::State& state) {
    auto filt = sphere_filtration(static_cast<index_t>(state.range(0)), 3);
    PrimeField F(2);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_reduce(filt, F));
}
BENCHMARK(BM_ExhaustiveReduce)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_WrapComplex(benchmark::State& state) {
    PointCloud X = sphere_points(static_cast<index_t>(state.range(0)), 3, 13);
    SimplicialComplex K = delaunay_complex(X);
    auto values = delaunay_radius_values(K, X);
    auto Kp = std::make_shared<SimplicialComplex>(std::move(K));
    GradientPartition g = gradient_partition(Kp, values);
    FiltValue r2(9, 10);  // near the sphere radius: most of the complex descends
    for (auto _ : state) benchmark::DoNotOptimize(descending_complex(g, r2));
}
BENCHMARK(BM_WrapComplex)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_LexMinimalCycle(benchmark::State& state) {
    auto filt = sphere_filtration(static_cast<index_t>(state.range(0)), 3);
    PrimeField F(2);
    ReductionResult res = exhaustive_reduce(filt, F);
    index_t death = -1;  // most persistent 2-dimensional feature
    double best = 0;
    for (const auto& p : res.pairs) {
        if (filt->degree_at(p.birth) != 2) continue;
        double gap = filt->display_value_at(p.death) - filt->display_value_at(p.birth);
        if (gap > best) best = gap, death = p.death;
    }
    Chain z = res.D.column(death);
    for (auto _ : state) benchmark::DoNotOptimize(lex_minimal_cycle(z, res, death));
}
BENCHMARK(BM_LexMinimalCycle)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
    PointCloud X = sphere_points(static_cast<index_t>(state.range(0)), 3, 17);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(X, 2));
}
BENCHMARK(BM_Reconstruct)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
