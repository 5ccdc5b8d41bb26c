#pragma once

#include "mqc/species.hpp"

#include <vector>

namespace mqc {

// One eigenlevel of H = A I.J + mu_B (g_J J_z + g_I I_z) B, tagged with the
// (M_J, M_I) product-state labels it connects to adiabatically as B -> inf.
struct ZeemanLevel {
    double field_au = 0.0;
    double energy_au = 0.0;
    double mj = 0.0;
    double mi = 0.0;
    double energy_slope_au = 0.0;    // dE/dB (Hellmann-Feynman)
    double magnetic_moment_au = 0.0; // -dE/dB
};

// All (2J+1)(2I+1) levels at the given field, sorted by increasing energy.
std::vector<ZeemanLevel> zeeman_map(const AtomSpecies& s, double field_au);

struct QubitLevels {
    ZeemanLevel upper; // (M_J = +J, M_I = qubit_m_i)
    ZeemanLevel lower; // (M_J = -J, M_I = qubit_m_i)
};

QubitLevels qubit_levels(const AtomSpecies& s, double field_au);

// E(|1>) - E(|0>), positive in the strong-field regime. Throws DomainError if
// the pair is degenerate (e.g. I = 0 at B = 0).
double qubit_transition_energy_au(const AtomSpecies& s, double field_au);

// Energy slopes (dE/dB, a.u.) of the two qubit levels at the given field.
// In the strong-field limit these approach the catalog values mu_qubit1/0.
struct QubitSlopes {
    double upper_au = 0.0;
    double lower_au = 0.0;
};

QubitSlopes qubit_slopes(const AtomSpecies& s, double field_au);

} // namespace mqc
