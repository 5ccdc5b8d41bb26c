#pragma once

#include "mqc/species.hpp"

namespace mqc {

// Standing-wave optical lattice V(z) = V0 sin^2(2 pi z / lambda); sites sit
// half a wavelength apart.
struct LatticeConfig {
    double wavelength_au = 0.0;
    double depth_au = 0.0;

    double site_spacing_au() const { return 0.5 * wavelength_au; }
    double wavenumber_au() const; // 2 pi / lambda
};

LatticeConfig make_lattice(double wavelength_au, double depth_au);

// Depth from laser intensity and scalar polarizability (both a.u.):
// V0 = 8 pi alpha * polarizability * intensity.
double depth_from_intensity(double polarizability_au, double intensity_au);

double recoil_energy_au(const AtomSpecies& s, const LatticeConfig& l);

// Harmonic frequency of one site, angular, a.u.: omega = k sqrt(2 V0 / M).
double trap_angular_frequency_au(const AtomSpecies& s, const LatticeConfig& l);

// Ground-band tunnel splitting J = E_R (4/sqrt(pi)) (V0/E_R)^{3/4} e^{-2 sqrt(V0/E_R)}
// (energy a.u.). Requires V0 >= E_R; below that the asymptotic formula is invalid.
double tunneling_energy_au(const AtomSpecies& s, const LatticeConfig& l);

// J as an ordinary frequency, and the site-change timescale pi / (J/h).
double tunneling_rate_hz(const AtomSpecies& s, const LatticeConfig& l);
double tunneling_time_s(const AtomSpecies& s, const LatticeConfig& l);

// Smallest depth whose tunneling time reaches target_s. Bisection to 1e-9
// relative on the depth; throws DomainError if the target sits below the
// validity floor (V0 = E_R) or beyond the depth cap.
double depth_for_tunneling_time_au(const AtomSpecies& s, double wavelength_au,
                                   double target_s, double depth_cap_au);
double depth_for_tunneling_time_au(const AtomSpecies& s, double wavelength_au,
                                   double target_s);

// Photon-scattering suppression factor for a ground-band atom, (1/2) sqrt(E_R/V0).
double scattering_suppression(const AtomSpecies& s, const LatticeConfig& l);

// Largest restoring force the lattice can exert, V0 * k (a.u.).
double max_optical_force_au(const LatticeConfig& l);

} // namespace mqc
