// Serial reference vs OpenMP kernels for the grid-parallel workloads.

#include <benchmark/benchmark.h>

#include <numbers>

#include "tcm/analysis.hpp"
#include "tcm/propagator.hpp"

namespace {

const tcm::ModelParams kParams = tcm::ModelParams::dimensionless(2.0, tcm::kDefaultLambda, 3);
const tcm::InitialStateSpec kSpec{tcm::Family::Phi, std::numbers::pi / 8};

void BM_TraceSerial(benchmark::State& state) {
    const auto grid = tcm::uniform_grid(20.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tcm::concurrence_trace_serial(kSpec, kParams, grid, tcm::Path::Oracle));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TraceOpenMP(benchmark::State& state) {
    const auto grid = tcm::uniform_grid(20.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tcm::concurrence_trace(kSpec, kParams, grid, tcm::Path::Oracle));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvolveGridSerial(benchmark::State& state) {
    const tcm::Basis basis(kParams.n_max());
    const auto decomp = tcm::make_propagator(kParams, basis);
    const auto psi0 = tcm::initial_state(kSpec, basis);
    const auto grid = tcm::uniform_grid(20.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tcm::evolve_grid_serial(psi0, decomp, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvolveGridOpenMP(benchmark::State& state) {
    const tcm::Basis basis(kParams.n_max());
    const auto decomp = tcm::make_propagator(kParams, basis);
    const auto psi0 = tcm::initial_state(kSpec, basis);
    const auto grid = tcm::uniform_grid(20.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tcm::evolve_grid(psi0, decomp, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SpectralDecompose(benchmark::State& state) {
    const auto params = tcm::ModelParams::dimensionless(2.0, tcm::kDefaultLambda, static_cast<int>(state.range(0)));
    const tcm::Basis basis(params.n_max());
    const auto H = tcm::build_hamiltonian(params, basis);
    for (auto _ : state) benchmark::DoNotOptimize(tcm::spectral_decompose(H));
}

}  // namespace

BENCHMARK(BM_TraceSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceOpenMP)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvolveGridSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveGridOpenMP)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpectralDecompose)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
