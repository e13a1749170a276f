#include <benchmark/benchmark.h>

#include "ptpara/greens.hpp"
#include "ptpara/oracle.hpp"
#include "ptpara/propagator.hpp"
#include "ptpara/spectrum.hpp"

namespace {

using namespace ptpara;

void BM_spectrum_table(benchmark::State& state) {
    auto p = PhysicalParams::natural(1.0, 0.5, 1.5);
    int n = int(state.range(0));
    for (auto _ : state) {
        auto table = spectrum::spectrum_table(p, n, n);
        benchmark::DoNotOptimize(table.entries.data());
    }
}
BENCHMARK(BM_spectrum_table)->Arg(4)->Arg(16)->Arg(64);

void BM_sho_kernel_1d(benchmark::State& state) {
    double q = 0.0;
    for (auto _ : state) {
        q += 1e-6;
        benchmark::DoNotOptimize(propagator::sho_kernel_1d(
            1.0, 1.0, 0.7, 1.3, 0.4 + q, -0.9, propagator::Representation::Euclidean));
    }
}
BENCHMARK(BM_sho_kernel_1d);

void BM_total_kernel(benchmark::State& state) {
    auto p = PhysicalParams::natural(1.0, 0.0, 2.0);
    coords::OscillatorPoint a{{0.3, -0.4}, {1.0, 0.2}};
    coords::OscillatorPoint b{{0.1, 0.8}, {-0.5, 0.6}};
    propagator::KernelRequest req{p, 0.25, a, b, 1.3, propagator::Representation::Euclidean};
    for (auto _ : state) benchmark::DoNotOptimize(propagator::total_kernel(req));
}
BENCHMARK(BM_total_kernel);

void BM_pseudo_greens(benchmark::State& state) {
    auto p = PhysicalParams::natural(1.3, 0.0, 0.0);
    coords::OscillatorPoint a{{0.9, 0.2}, {1.1, -0.3}};
    coords::OscillatorPoint b{{1.3, -0.1}, {0.7, 0.4}};
    greens::GreensRequest req{p, -2.0, a, b, {}};
    for (auto _ : state) benchmark::DoNotOptimize(greens::pseudo_greens(req));
}
BENCHMARK(BM_pseudo_greens)->Unit(benchmark::kMillisecond);

void BM_radial_shoot(benchmark::State& state) {
    oracle::RadialProblem pb;
    pb.omega = 0.25;
    pb.l = Complex(1.0, 1.0);
    pb.n_r = 1;
    for (auto _ : state) benchmark::DoNotOptimize(oracle::radial_shoot(pb));
}
BENCHMARK(BM_radial_shoot)->Unit(benchmark::kMillisecond);

void BM_phase_scan(benchmark::State& state) {
    auto base = PhysicalParams::natural(1.0, 0.0, 0.0);
    std::vector<std::pair<double, double>> grid;
    for (int i = 0; i < 41; ++i)
        for (int j = 0; j < 41; ++j)
            grid.emplace_back((i - 20) / 10.0, (j - 20) / 10.0);
    int threads = int(state.range(0));
    for (auto _ : state) {
        auto reports = spectrum::pt_phase_scan(base, grid, 4, threads);
        benchmark::DoNotOptimize(reports.data());
    }
}
BENCHMARK(BM_phase_scan)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();
