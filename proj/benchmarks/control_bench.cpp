#include <symctrl/symctrl.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace symctrl;

Eigen::MatrixXd unit_path(std::size_t n) {
    const GraphSpec g = generate(GraphModel::path(), n, 0);
    return to_real(assemble_adjacency({g, unit_weights(g), 0}));
}

void BM_ConditionReport(benchmark::State& state) {
    const Eigen::MatrixXd a = unit_path(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(condition_report(a, 0));
}
BENCHMARK(BM_ConditionReport)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_MinEnergyControl(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const Eigen::MatrixXd a = normalize_spectral(unit_path(n), 0.9);
    const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd xf = Eigen::VectorXd::Zero(n);
    xf(n - 1) = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(min_energy_control(a, 0, x0, xf, n));
}
BENCHMARK(BM_MinEnergyControl)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
