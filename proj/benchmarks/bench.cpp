#include <numbers>

#include <benchmark/benchmark.h>

#include "darboux/transforms.hpp"
#include "darboux/wronskian.hpp"

using darboux::Jet;

namespace {

const darboux::PotentialFamily& morse() {
    static const auto fam = darboux::morse_family({2.0 * std::numbers::sqrt2, 1.0}, 3);
    return fam;
}

const darboux::PotentialFamily& ginocchio() {
    static const auto fam = darboux::ginocchio_family({0.8, 4.0}, 4);
    return fam;
}

void BM_JetMultiply(benchmark::State& state) {
    const Jet a = darboux::exp(Jet::variable(0.4, static_cast<int>(state.range(0))));
    const Jet b = darboux::cosh(Jet::variable(0.4, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiply)->Arg(4)->Arg(10)->Arg(16);

void BM_JetSechPow(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(darboux::pow(darboux::sech(Jet::variable(0.7, 8)), 4.0));
}
BENCHMARK(BM_JetSechPow);

void BM_GinocchioCoordinate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(darboux::ginocchio_coordinate({0.8, 4.0}, 0.7, 6));
}
BENCHMARK(BM_GinocchioCoordinate);

void BM_WronskianTriple(benchmark::State& state) {
    std::vector<darboux::JetFun> fs;
    for (const auto& e : morse().eigenpairs) fs.push_back(e.wavefunction);
    for (auto _ : state) benchmark::DoNotOptimize(darboux::wronskian(fs, 0.5, 2));
}
BENCHMARK(BM_WronskianTriple);

void BM_CrumPotential(benchmark::State& state) {
    const auto& fam = state.range(0) == 0 ? morse() : ginocchio();
    for (auto _ : state) benchmark::DoNotOptimize(darboux::crum_potential(fam, 2, 0.5, 0));
}
BENCHMARK(BM_CrumPotential)->Arg(0)->Arg(1);

void BM_ChainPotential(benchmark::State& state) {
    const auto chain = darboux::darboux_chain(morse(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(chain.potential(0.5, 0));
}
BENCHMARK(BM_ChainPotential);

}  // namespace

BENCHMARK_MAIN();
