#include <benchmark/benchmark.h>

#include <random>

#include "bqlp/flux.hpp"
#include "bqlp/initial_condition.hpp"
#include "bqlp/littlewood_paley.hpp"
#include "bqlp/solver.hpp"
#include "bqlp/spectral_ops.hpp"
#include "bqlp/transform.hpp"

namespace {

bqlp::GridSpec grid_of(int n) {
    bqlp::GridSpec g;
    g.n = n;
    return g;
}

bqlp::SolverState random_state(int n) {
    bqlp::InitialCondition ic;
    ic.kind = bqlp::InitialKind::random_band;
    ic.theta_amplitude = 1.0;
    ic.seed = 1;
    return bqlp::make_initial_state(grid_of(n), ic);
}

void BM_ForwardTransform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bqlp::PhysicalField p(n);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    for (double& v : p.values) v = normal(rng);
    const bqlp::GridSpec g = grid_of(n);
    for (auto _ : state) benchmark::DoNotOptimize(bqlp::forward_transform(p, g));
}
BENCHMARK(BM_ForwardTransform)->Arg(16)->Arg(32)->Arg(64);

void BM_InverseTransformOversampled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = random_state(n);
    for (auto _ : state) benchmark::DoNotOptimize(bqlp::inverse_transform(s.theta, 2));
}
BENCHMARK(BM_InverseTransformOversampled)->Arg(16)->Arg(32)->Arg(64);

void BM_Decompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = random_state(n);
    const bqlp::lp::DyadicSymbolFamily fam(s.grid());
    for (auto _ : state) benchmark::DoNotOptimize(bqlp::lp::decompose(fam, s.u));
}
BENCHMARK(BM_Decompose)->Arg(16)->Arg(32)->Arg(64);

void BM_BlockSupNorms(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = random_state(n);
    const bqlp::lp::DyadicSymbolFamily fam(s.grid());
    for (auto _ : state) benchmark::DoNotOptimize(bqlp::lp::block_sup_norms(fam, s.u));
}
BENCHMARK(BM_BlockSupNorms)->Arg(16)->Arg(32);

void BM_Rhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = random_state(n);
    for (auto _ : state) benchmark::DoNotOptimize(bqlp::rhs(s));
}
BENCHMARK(BM_Rhs)->Arg(16)->Arg(32)->Arg(64);

void BM_Step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto s = random_state(n);
    bqlp::SolverParams p;
    p.dt = 1e-3;
    bqlp::Stepper stepper(s.grid(), p);
    for (auto _ : state) benchmark::DoNotOptimize(stepper.step(s, p.dt));
}
BENCHMARK(BM_Step)->Arg(16)->Arg(32);

void BM_FluxTerms(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = random_state(n);
    const bqlp::lp::DyadicSymbolFamily fam(s.grid());
    for (auto _ : state) benchmark::DoNotOptimize(bqlp::flux_terms(fam, s.u, s.theta, 0.5, -0.25));
}
BENCHMARK(BM_FluxTerms)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
