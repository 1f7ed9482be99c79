#include <benchmark/benchmark.h>

#include "shgauge/conductivity.hpp"
#include "shgauge/eigensolver.hpp"
#include "shgauge/gauge_fields.hpp"
#include "shgauge/hamiltonians.hpp"

using namespace shgauge;

static void BM_KmEigenvalues(benchmark::State& state) {
    PhysParams p;
    p.lambda_r = 0.3;
    const auto h = build_km_hamiltonian(p, {0.4, -0.7});
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_KmEigenvalues);

static void BM_FwGaugeField(benchmark::State& state) {
    const PhysParams p;
    const auto method = state.range(0) == 0 ? FwMethod::kAnalytic : FwMethod::kDifferential;
    for (auto _ : state) benchmark::DoNotOptimize(fw_gauge_field({0.4, -0.7}, p, method));
}
BENCHMARK(BM_FwGaugeField)->Arg(0)->Arg(1);

static void BM_FieldStrength(benchmark::State& state) {
    PhysParams p;
    p.lambda_r = 0.4;
    p.b_field = 0.6;
    const auto field = km_gauge_field(p);
    for (auto _ : state) benchmark::DoNotOptimize(field_strength(field, p));
}
BENCHMARK(BM_FieldStrength);

static void BM_PlaquetteGrid(benchmark::State& state) {
    const PhysParams p;
    const auto n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(plaquette_curvature({5.0, n}, p));
}
BENCHMARK(BM_PlaquetteGrid)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_SigmaBerryRadial(benchmark::State& state) {
    const PhysParams p;
    for (auto _ : state) benchmark::DoNotOptimize(sigma_berry(1.0, p));
}
BENCHMARK(BM_SigmaBerryRadial)->Unit(benchmark::kMillisecond);

static void BM_SigmaKuboRadial(benchmark::State& state) {
    const PhysParams p;
    for (auto _ : state) benchmark::DoNotOptimize(sigma_kubo(1.0, p));
}
BENCHMARK(BM_SigmaKuboRadial)->Unit(benchmark::kMillisecond);

static void BM_SigmaBerryPolarGrid(benchmark::State& state) {
    const PhysParams p;
    QuadratureSpec q;
    q.scheme = QuadratureScheme::kPolarGrid;
    for (auto _ : state) benchmark::DoNotOptimize(sigma_berry(1.0, p, q));
}
BENCHMARK(BM_SigmaBerryPolarGrid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
