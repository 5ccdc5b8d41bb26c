#pragma once

#include "mqc/chain.hpp"
#include "mqc/schedule.hpp"
#include "mqc/species.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

// Reference implementations kept deliberately independent of the library
// internals: closed-form level formulas, dense matrix exponentials and a
// textbook two-level flop, so each check compares two different routes.
namespace oracle {

// All (2I+1)(2J+1) eigenvalues of the hyperfine + linear Zeeman Hamiltonian
// for J = 1/2 from the closed-form two-level expressions, ascending.
std::vector<double> breit_rabi_levels(const mqc::AtomSpecies& s, double b_au);

// Excited-state population of a two-level system driven at Rabi frequency
// rabi, detuning delta, for time t (all angular, consistent units).
double rabi_flop(double rabi, double delta, double t);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::MatrixXcd site_op(const Eigen::Matrix2cd& op, int site, int n);

// Dense chain Hamiltonian (rad/s) with site 0 on the least significant bit.
Eigen::MatrixXcd dense_hamiltonian(const mqc::SpinChainModel& m);

// exp(-i h t) of a Hermitian matrix via full diagonalization.
Eigen::MatrixXcd expm_herm(const Eigen::MatrixXcd& h, double t);

// Exact propagator of one pulse: ideal pulses as rotation sandwiched in free
// flight, finite pulses as a constant carrier-frame Hamiltonian exponential.
Eigen::MatrixXcd dense_pulse_unitary(const mqc::SpinChainModel& m, const mqc::Pulse& p);

Eigen::MatrixXcd dense_schedule_unitary(const mqc::SpinChainModel& m,
                                        const mqc::PulseSchedule& s);

// Synthetic chain with MHz-scale transition spacings and random couplings.
mqc::SpinChainModel random_model(int n, std::uint64_t seed);

// Uniformly spaced synthetic chain: transitions 2pi*(10+i) MHz, couplings
// -2pi*20/|i-j|^3 rad/s.
mqc::SpinChainModel uniform_model(int n);

} // namespace oracle
