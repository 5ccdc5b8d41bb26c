#include "mqc/simulator.hpp"

#include "mqc/error.hpp"
#include "oracles.hpp"

#include <doctest/doctest.h>

#include <numbers>
#include <random>

using namespace mqc;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

ChainState random_state(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    ChainState st = ChainState::basis(n, 0);
    for (long b = 0; b < st.amp.size(); ++b)
        st.amp(b) = std::complex<double>(g(rng), g(rng));
    st.amp /= st.amp.norm();
    return st;
}

double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("basis state guards")
{
    auto st = ChainState::basis(2, 3);
    CHECK(st.sites == 2);
    CHECK(st.amp.size() == 4);
    CHECK(std::abs(st.amp(3) - 1.0) == 0.0);
    CHECK(st.norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(ChainState::basis(0, 0), ConfigError);
    CHECK_THROWS_AS(ChainState::basis(15, 0), ConfigError);
    CHECK_THROWS_AS(ChainState::basis(2, 4), ConfigError);
}

TEST_CASE("free evolution matches the dense propagator")
{
    for (int n = 2; n <= 5; ++n) {
        auto m = oracle::random_model(n, 100 + n);
        auto st = random_state(n, 200 + n);
        const double t = 1e-6;
        auto out = evolve_free(st, m, t);
        Eigen::VectorXcd expect =
            oracle::expm_herm(oracle::dense_hamiltonian(m), t) * st.amp;
        CHECK(max_diff(out.amp, expect) <= 1e-12);
        CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-13));
    }

    auto m = oracle::uniform_model(2);
    CHECK_THROWS_AS(evolve_free(ChainState::basis(3, 0), m, 1e-6), ConfigError);
    CHECK_THROWS_AS(evolve_free(ChainState::basis(2, 0), m, -1e-6), ConfigError);
}

TEST_CASE("ideal pulses are exact centre-fired rotations")
{
    auto m = oracle::uniform_model(3);
    auto st = random_state(3, 7);

    for (auto p : {ideal_pulse(1, Axis::y, 0.5 * pi, 2e-7), ideal_pulse(0, Axis::x, pi),
                   ideal_pulse(2, Axis::x, 0.3, 1e-7)}) {
        auto out = apply_pulse(st, m, p);
        Eigen::VectorXcd expect = oracle::dense_pulse_unitary(m, p) * st.amp;
        CHECK(max_diff(out.amp, expect) <= 1e-12);
    }

    CHECK_THROWS_AS(apply_pulse(st, m, ideal_pulse(3, Axis::x, pi)), ConfigError);
}

TEST_CASE("finite pulses converge to the exact rotating-frame propagator")
{
    // The driven Hamiltonian is time-independent in the carrier frame, so a
    // dense matrix exponential gives the exact answer to compare against.
    for (int n : {2, 3}) {
        auto m = oracle::uniform_model(n);
        auto st = random_state(n, 40 + n);
        auto p = finite_pulse(0, Axis::x, pi, two_pi * 5e4);
        Eigen::VectorXcd expect = oracle::dense_pulse_unitary(m, p) * st.amp;

        auto coarse = apply_pulse(st, m, p, {.step_scale = 50.0});
        CHECK(max_diff(coarse.amp, expect) <= 5e-3);
        CHECK(coarse.norm() == doctest::Approx(1.0).epsilon(1e-13));

        auto fine = apply_pulse(st, m, p, {.step_scale = 2000.0});
        CHECK(max_diff(fine.amp, expect) <= 1e-6);
    }

    // Second-order splitting: doubling the step count cuts the error ~4x.
    auto m = oracle::uniform_model(2);
    auto st = random_state(2, 99);
    auto p = finite_pulse(1, Axis::y, pi, two_pi * 5e4);
    Eigen::VectorXcd expect = oracle::dense_pulse_unitary(m, p) * st.amp;
    double e1 = max_diff(apply_pulse(st, m, p, {.step_scale = 50.0}).amp, expect);
    double e2 = max_diff(apply_pulse(st, m, p, {.step_scale = 100.0}).amp, expect);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.3));
}

TEST_CASE("detuned drive follows the two-level flopping formula")
{
    mqc::SpinChainModel m;
    m.omega_rad_s = {-pi * 1e7};
    m.position_m = {0.0};
    m.mu_bar_mub = {0.0};
    m.delta_mu_mub = {1.0};
    m.g_rad_s = Eigen::MatrixXd::Zero(1, 1);

    const double rabi = two_pi * 1e4;
    const double res = m.resonance_omega(0);

    auto on_res = apply_pulse(ChainState::basis(1, 0), m,
                              finite_pulse(0, Axis::x, pi, rabi), {.step_scale = 2000.0});
    CHECK(std::norm(on_res.amp(1)) == doctest::Approx(1.0).epsilon(1e-9));

    for (double delta : {two_pi * 5e3, two_pi * 2e4, two_pi * 1e5}) {
        auto p = finite_pulse(0, Axis::x, pi, rabi, res + delta);
        auto out = apply_pulse(ChainState::basis(1, 0), m, p, {.step_scale = 10000.0});
        CHECK(std::abs(std::norm(out.amp(1))
                       - oracle::rabi_flop(rabi, delta, p.duration_s))
              <= 1e-7);
    }

    // A pi pulse detuned by exactly twice its Rabi frequency leaks
    // (1/5) sin^2(sqrt(5) pi / 2) of the population.
    CHECK(oracle::rabi_flop(rabi, 2.0 * rabi, pi / rabi)
          == doctest::Approx(0.026263112192168037).epsilon(1e-12));
}

TEST_CASE("schedules compose and preserve norm")
{
    auto m = oracle::uniform_model(3);
    PulseSchedule s;
    s.events.push_back(ideal_pulse(0, Axis::x, pi, 1e-7));
    s.events.push_back(Delay{2e-7});
    s.events.push_back(finite_pulse(1, Axis::y, 0.5 * pi, two_pi * 5e4));
    s.events.push_back(Delay{1e-7});
    s.events.push_back(ideal_pulse(2, Axis::y, 0.25 * pi));

    auto st = random_state(3, 5);
    auto out = run_schedule(st, m, s, {.step_scale = 2000.0});
    Eigen::VectorXcd expect = oracle::dense_schedule_unitary(m, s) * st.amp;
    CHECK(max_diff(out.amp, expect) <= 1e-6);
    // ~1e5 steps at this step_scale; allow accumulated rounding.
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::MatrixXcd u = schedule_unitary(m, s, {.step_scale = 2000.0});
    Eigen::MatrixXcd ud = oracle::dense_schedule_unitary(m, s);
    CHECK((u - ud).cwiseAbs().maxCoeff() <= 1e-6);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff()
          <= 1e-10);
}

TEST_CASE("convergence check fails loudly when asked for the impossible")
{
    auto m = oracle::uniform_model(2);
    auto p = finite_pulse(0, Axis::x, pi, two_pi * 5e4);
    SimOptions strict{.step_scale = 50.0, .convergence_check = true,
                      .step_tolerance = 1e-15};
    CHECK_THROWS_AS(apply_pulse(ChainState::basis(2, 0), m, p, strict), DomainError);

    SimOptions relaxed{.step_scale = 50.0, .convergence_check = true,
                       .step_tolerance = 1e-2};
    CHECK_NOTHROW(apply_pulse(ChainState::basis(2, 0), m, p, relaxed));
}

TEST_CASE("gate fidelity and reference unitaries")
{
    auto u = oracle::dense_schedule_unitary(
        oracle::uniform_model(2),
        PulseSchedule{{ideal_pulse(0, Axis::x, 0.7), Event{Delay{1e-7}}}});
    CHECK(gate_fidelity(u, u) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gate_fidelity(u, std::exp(std::complex<double>(0, 1.23)) * u)
          == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(gate_fidelity(u, Eigen::MatrixXcd::Identity(8, 8)), ConfigError);

    auto nt = ideal_not_unitary(2, 1);
    CHECK(nt(2, 0) == std::complex<double>(1.0));
    CHECK(nt(1, 3) == std::complex<double>(1.0));
    CHECK(nt(0, 0) == std::complex<double>(0.0));

    auto cn = ideal_cnot_unitary(2, 0, 1);
    CHECK(cn(0, 0) == std::complex<double>(1.0));
    CHECK(cn(3, 1) == std::complex<double>(1.0));
    CHECK(cn(1, 3) == std::complex<double>(1.0));
    CHECK(cn(2, 2) == std::complex<double>(1.0));
}

TEST_CASE("gate grading separates fidelity from spectator crosstalk")
{
    auto m = oracle::uniform_model(2);

    PulseSchedule exact;
    exact.events.push_back(ideal_pulse(1, Axis::x, pi));
    auto r = grade_gate(m, exact, ideal_not_unitary(2, 1));
    CHECK(r.sites == 2);
    CHECK(r.pulse_count == 1);
    CHECK(r.duration_s == 0.0);
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.crosstalk[0] <= 1e-15);
    CHECK(r.crosstalk[1] == 0.0); // the driven site is not a spectator

    // A finite pulse bleeds into the off-resonant neighbour 1 MHz away.
    PulseSchedule finite;
    finite.events.push_back(finite_pulse(1, Axis::x, pi, two_pi * 1e5));
    auto rf = grade_gate(m, finite, ideal_not_unitary(2, 1), {.step_scale = 500.0});
    CHECK(rf.fidelity < 1.0);
    CHECK(rf.crosstalk[0] > 1e-8);
    CHECK(rf.crosstalk[0] < 0.05);
}
