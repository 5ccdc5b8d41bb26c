#pragma once

#include "mqc/lattice.hpp"
#include "mqc/species.hpp"

#include <cstdint>

namespace mqc {

// First-order excitation estimates above this are outside the perturbative
// regime and get flagged by the feasibility guards.
inline constexpr double perturbative_limit = 0.1;

// Suppression of drive-induced motional excitation versus the sudden
// parameter xi = (half drive frequency) / (level gap): ~xi^2 for adiabatic
// drives, -> 1 in the sudden limit, bounded by 1 throughout.
double adiabaticity_suppression(double xi);

// Excitation out of the motional ground state when a population swap turns
// on a perturbation with the given matrix element across gap_au while the
// drive runs at rabi_au. All fields atomic units (hbar = 1).
struct HeatingProblem {
    double rabi_au = 0.0;
    double element_au = 0.0;
    double gap_au = 0.0;
};
double heating_probability(const HeatingProblem& p);

// Gradient-force channel: the qubit flip displaces the trap centre, with
// coupling |mu1 - mu0| * gradient * z01 into the first excited trap level.
struct GradientHeating {
    double probability = 0.0;
    double xi = 0.0;            // (Omega/2) / omega_ho
    double element_au = 0.0;
    double osc_length_au = 0.0; // z01 = 1 / sqrt(2 M omega_ho)
    double trap_omega_au = 0.0;
};
GradientHeating gradient_heating(const AtomSpecies& s, const LatticeConfig& l,
                                 double gradient_au, double rabi_rad_s);

// Depth-mismatch channel into the second trap level: probability is
// prefactor * (zeeman_split / detuning)^2 with the prefactor G(Omega/(4 w))/32.
double splitting_heating_prefactor(double rabi_rad_s, double trap_omega_rad_s);
double polarizability_heating(double rabi_rad_s, double trap_omega_rad_s,
                              double zeeman_split_au, double detuning_au);

// White magnetic-field noise. psd_au is the white-noise intensity in atomic
// units, defined by Var(integral of B dt over tau) = psd * tau.
struct NoiseSpec {
    double psd_au = 0.0;
    double duration_au = 0.0;
    double moment_au = 0.0; // qubit moment magnitude mu0
};
// Phase-damping error 4 mu0^2 psd tau of one conditional gate.
double dephasing_error(const NoiseSpec& n);
// Largest tolerable noise for a target error, as an amplitude spectral
// density sqrt(psd) in atomic units.
double noise_tolerance_asd_au(double epsilon, double duration_au, double moment_au);

struct DephasingEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long trials = 0;
};
// Stochastic cross-check of dephasing_error. Each trial draws the net field
// integral first and refines it into 2^levels Brownian-bridge steps, so the
// estimate is independent of the step count by construction; deterministic
// for a fixed seed.
DephasingEstimate dephasing_monte_carlo(const NoiseSpec& n, long trials,
                                        std::uint64_t seed, int levels = 10);

} // namespace mqc
