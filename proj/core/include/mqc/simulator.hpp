#pragma once

#include "mqc/chain.hpp"
#include "mqc/schedule.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace mqc {

// Full state vector of up to 14 qubits. Site i maps to bit i of the basis
// index (site 0 is the least significant bit); sigma_z |0> = +|0>.
struct ChainState {
    int sites = 0;
    Eigen::VectorXcd amp;

    static ChainState basis(int sites, std::uint32_t bits);
    double norm() const;
};

inline constexpr int max_sim_sites = 14;
inline constexpr int max_unitary_sites = 10;

struct SimOptions {
    // Integration step <= 1 / (step_scale * max characteristic angular
    // frequency); the default honours the 1/50 rule.
    double step_scale = 50.0;
    // Re-run each finite pulse with half the step and fail loudly if the
    // result moved by more than step_tolerance (no silent degradation).
    bool convergence_check = false;
    double step_tolerance = 1e-8;
};

ChainState evolve_free(const ChainState& in, const SpinChainModel& m, double time_s);
ChainState apply_pulse(const ChainState& in, const SpinChainModel& m, const Pulse& p,
                       const SimOptions& opts = {});
ChainState run_schedule(const ChainState& in, const SpinChainModel& m,
                        const PulseSchedule& s, const SimOptions& opts = {});

// Realized unitary, assembled column by column from basis states.
Eigen::MatrixXcd schedule_unitary(const SpinChainModel& m, const PulseSchedule& s,
                                  const SimOptions& opts = {});

// |Tr(U_ideal^dag U_real)| / 2^N, insensitive to global phase.
double gate_fidelity(const Eigen::MatrixXcd& realized, const Eigen::MatrixXcd& ideal);

Eigen::MatrixXcd ideal_not_unitary(int sites, int target);
Eigen::MatrixXcd ideal_cnot_unitary(int sites, int control, int target);

struct GateReport {
    int sites = 0;
    double fidelity = 0.0;
    double duration_s = 0.0;
    int pulse_count = 0;
    std::vector<double> crosstalk; // flip probability per spectator site, |0...0> input

    std::string to_json() const;
};

GateReport grade_gate(const SpinChainModel& m, const PulseSchedule& s,
                      const Eigen::MatrixXcd& ideal, const SimOptions& opts = {});

} // namespace mqc
