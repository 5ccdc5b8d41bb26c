#include "mqc/chain.hpp"
#include "mqc/compiler.hpp"
#include "mqc/decoherence.hpp"
#include "mqc/lattice.hpp"
#include "mqc/simulator.hpp"
#include "mqc/species.hpp"
#include "mqc/units.hpp"
#include "mqc/zeeman.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

namespace {

constexpr double pi = std::numbers::pi;

// Synthetic chain with MHz-spaced transitions, heavy enough couplings to
// exercise the propagators without waiting on real gate times.
mqc::SpinChainModel synthetic_chain(int n)
{
    mqc::SpinChainModel m;
    m.omega_rad_s.resize(n);
    m.g_rad_s = Eigen::MatrixXd::Zero(n, n);
    m.position_m.resize(n);
    m.mu_bar_mub.assign(n, 0.0);
    m.delta_mu_mub.assign(n, 1.0);
    for (int i = 0; i < n; ++i) {
        m.omega_rad_s[i] = -pi * (10.0 + i) * 1e6;
        m.position_m[i] = 1.25e-7 * i;
        for (int j = 0; j < i; ++j) {
            double g = -2.0 * pi * 20.0 / std::pow(double(i - j), 3);
            m.g_rad_s(i, j) = m.g_rad_s(j, i) = g;
        }
    }
    return m;
}

const mqc::AtomSpecies& sodium()
{
    static mqc::SpeciesCatalog cat = mqc::SpeciesCatalog::builtin();
    return cat.get("Na-23");
}

mqc::LatticeConfig reference_lattice()
{
    return mqc::make_lattice(mqc::units::make(250.0, "nm").au,
                             mqc::units::make(0.4, "mK").au);
}

void BM_BuildChain(benchmark::State& state)
{
    mqc::LatticeConfig lat = reference_lattice();
    mqc::FieldProfile field{mqc::units::make(1.0, "G").au,
                            mqc::units::make(20.0, "G/cm").au};
    for (auto _ : state)
        benchmark::DoNotOptimize(mqc::build_chain(sodium(), lat, field, 8));
}
BENCHMARK(BM_BuildChain);

void BM_EvolveFree12(benchmark::State& state)
{
    mqc::SpinChainModel m = synthetic_chain(12);
    mqc::ChainState in = mqc::ChainState::basis(12, 0b101001110010);
    for (auto _ : state)
        benchmark::DoNotOptimize(mqc::evolve_free(in, m, 1e-6));
}
BENCHMARK(BM_EvolveFree12);

void BM_FiniteNot6(benchmark::State& state)
{
    mqc::SpinChainModel m = synthetic_chain(6);
    mqc::PulseSchedule s =
        mqc::compile_not(m, 2, {mqc::PulseModel::finite, 2.0 * pi * 2e4});
    mqc::ChainState in = mqc::ChainState::basis(6, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(mqc::run_schedule(in, m, s, {}));
}
BENCHMARK(BM_FiniteNot6);

void BM_IdealCnotGrade4(benchmark::State& state)
{
    mqc::SpinChainModel m = synthetic_chain(4);
    Eigen::MatrixXcd ideal = mqc::ideal_cnot_unitary(4, 0, 2);
    for (auto _ : state) {
        mqc::PulseSchedule s = mqc::compile_cnot(m, 0, 2, {});
        benchmark::DoNotOptimize(mqc::grade_gate(m, s, ideal, {}));
    }
}
BENCHMARK(BM_IdealCnotGrade4);

void BM_ZeemanMapCs(benchmark::State& state)
{
    mqc::SpeciesCatalog cat = mqc::SpeciesCatalog::builtin();
    const mqc::AtomSpecies& cs = cat.get("Cs-133");
    double b = mqc::units::make(1.0, "G").au;
    for (auto _ : state)
        benchmark::DoNotOptimize(mqc::zeeman_map(cs, b));
}
BENCHMARK(BM_ZeemanMapCs);

void BM_SuppressionGrid(benchmark::State& state)
{
    for (auto _ : state) {
        double acc = 0.0;
        for (int k = 0; k < 1000; ++k)
            acc += mqc::adiabaticity_suppression(std::pow(10.0, -3.0 + 6.0 * k / 999.0));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_SuppressionGrid);

void BM_DephasingMonteCarlo(benchmark::State& state)
{
    mqc::NoiseSpec noise{1e-22, 1.24e14, 0.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(mqc::dephasing_monte_carlo(noise, 1000, 42));
}
BENCHMARK(BM_DephasingMonteCarlo);

} // namespace

BENCHMARK_MAIN();
