#pragma once

// Atomic units: hbar = m_e = |e| = 1, so the Bohr magneton is exactly 1/2 and
// energies equal angular frequencies. CODATA 2018 anchors below convert to SI.

namespace mqc::consts {

inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double bohr_m = 5.29177210903e-11;
inline constexpr double hartree_j = 4.3597447222071e-18;
inline constexpr double atomic_time_s = 2.418884326509e-17;
inline constexpr double planck_j_s = 6.62607015e-34;
inline constexpr double boltzmann_j_k = 1.380649e-23;
inline constexpr double amu_me = 1822.888486209;
inline constexpr double bohr_magneton_j_t = 9.2740100783e-24;
inline constexpr double electron_mass_kg = 9.1093837015e-31;

inline constexpr double bohr_magneton_au = 0.5;

// One atomic unit of magnetic field in tesla; defined so that mu_B * B_au = E_h / 2.
inline constexpr double field_au_t = hartree_j / (2.0 * bohr_magneton_j_t);
inline constexpr double hartree_k = hartree_j / boltzmann_j_k;
inline constexpr double intensity_au_w_m2 = hartree_j / (bohr_m * bohr_m * atomic_time_s);
inline constexpr double gradient_au_t_m = field_au_t / bohr_m;

// One atomic unit of white-noise field spectral density, expressed in T^2/Hz.
// Convention: <B(t1) B(t2)> = S * delta(t1 - t2) with t in seconds.
inline constexpr double psd_au_t2_hz = field_au_t * field_au_t * atomic_time_s;

} // namespace mqc::consts
