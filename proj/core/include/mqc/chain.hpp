#pragma once

#include "mqc/lattice.hpp"
#include "mqc/species.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace mqc {

// Bias plus linear gradient along the chain: B(z) = bias + gradient * z.
struct FieldProfile {
    double bias_au = 0.0;     // magnetic field, a.u.
    double gradient_au = 0.0; // field gradient, a.u.
};

// Effective two-level chain Hamiltonian (angular frequencies, rad/s):
//   H = sum_i omega_i sz_i + sum_{i<j} g_ij sz_i sz_j
// omega_i is the per-site half-splitting coefficient of sigma_z (negative for
// the usual slope signs); the observable transition at site i is -2*omega_i.
// g_ij = -2 alpha^2 delta_mu_i delta_mu_j / r_ij^3 with delta_mu the
// half-difference of the qubit level slopes.
struct SpinChainModel {
    std::vector<double> omega_rad_s;
    Eigen::MatrixXd g_rad_s;
    std::vector<double> position_m;
    std::vector<double> mu_bar_mub;   // (mu1 + mu0)/2 per site, Bohr magnetons
    std::vector<double> delta_mu_mub; // (mu1 - mu0)/2 per site, Bohr magnetons

    int size() const { return static_cast<int>(omega_rad_s.size()); }
    double transition_omega(int i) const { return -2.0 * omega_rad_s[i]; }
    // Transition of site i when every other qubit sits in |0>.
    double resonance_omega(int i) const;
    // Smallest |f_{i+1} - f_i| between neighbouring site transitions (Hz).
    double min_neighbor_splitting_hz() const;

    std::string to_json() const;
    static SpinChainModel from_json(const std::string& text);
};

SpinChainModel build_chain(const AtomSpecies& s, const LatticeConfig& l,
                           const FieldProfile& f, int sites);

// Frequency separation between the two target transitions of a conditional
// gate: Delta_f = 2 alpha^2 R^-3 (mu1 - mu0)^2, as an ordinary frequency (Hz).
// Equals 4 |g_nn| expressed in Hz; catalog (strong-field) moments are used.
double cnot_shift_hz(const AtomSpecies& s, const LatticeConfig& l);
double cnot_time_s(const AtomSpecies& s, const LatticeConfig& l); // 1/(2 pi Delta_f)

// Gradient such that neighbouring site transitions differ by 1/tau_not (the
// spacing the addressing design enforces), and its inverse.
double gradient_for_not_time_au(const AtomSpecies& s, const LatticeConfig& l, double tau_not_s);
double not_time_for_gradient_s(const AtomSpecies& s, const LatticeConfig& l, double gradient_au);

// Ratio of the lattice's maximum restoring force to the magnetic force
// max|mu| * gradient. Designs require >= 100.
double force_bound_margin(const AtomSpecies& s, const LatticeConfig& l, double gradient_au);

} // namespace mqc
