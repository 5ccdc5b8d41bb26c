#include "mqc/lattice.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"
#include "mqc/units.hpp"

#include <cmath>
#include <numbers>

namespace mqc {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
} // namespace

double LatticeConfig::wavenumber_au() const
{
    return two_pi / wavelength_au;
}

LatticeConfig make_lattice(double wavelength_au, double depth_au)
{
    if (!(wavelength_au > 0.0))
        throw ConfigError("lattice wavelength must be positive");
    if (!(depth_au > 0.0))
        throw ConfigError("lattice depth must be positive");
    return {wavelength_au, depth_au};
}

double depth_from_intensity(double polarizability_au, double intensity_au)
{
    if (!(polarizability_au > 0.0) || !(intensity_au > 0.0))
        throw ConfigError("polarizability and intensity must be positive");
    return 8.0 * pi * consts::fine_structure * polarizability_au * intensity_au;
}

double recoil_energy_au(const AtomSpecies& s, const LatticeConfig& l)
{
    double k = l.wavenumber_au();
    return k * k / (2.0 * s.mass_au);
}

double trap_angular_frequency_au(const AtomSpecies& s, const LatticeConfig& l)
{
    return l.wavenumber_au() * std::sqrt(2.0 * l.depth_au / s.mass_au);
}

double tunneling_energy_au(const AtomSpecies& s, const LatticeConfig& l)
{
    double er = recoil_energy_au(s, l);
    double v = l.depth_au / er;
    if (v < 1.0)
        throw DomainError("depth below one recoil energy: tunneling formula invalid");
    return er * (4.0 / std::sqrt(pi)) * std::pow(v, 0.75) * std::exp(-2.0 * std::sqrt(v));
}

double tunneling_rate_hz(const AtomSpecies& s, const LatticeConfig& l)
{
    return tunneling_energy_au(s, l) / (two_pi * consts::atomic_time_s);
}

double tunneling_time_s(const AtomSpecies& s, const LatticeConfig& l)
{
    return pi / tunneling_rate_hz(s, l);
}

double depth_for_tunneling_time_au(const AtomSpecies& s, double wavelength_au,
                                   double target_s, double depth_cap_au)
{
    if (!(target_s > 0.0))
        throw ConfigError("tunneling time target must be positive");
    LatticeConfig probe{wavelength_au, 0.0};
    double er = recoil_energy_au(s, LatticeConfig{wavelength_au, 1.0});

    auto time_at = [&](double depth) {
        probe.depth_au = depth;
        return tunneling_time_s(s, probe);
    };

    double lo = er * (1.0 + 1e-12);
    if (time_at(lo) >= target_s)
        throw DomainError("tunneling time target below the validity floor (depth = one recoil)");
    double hi = depth_cap_au;
    if (!(hi > lo))
        throw ConfigError("depth cap below the validity floor");
    if (time_at(hi) < target_s)
        throw DomainError("tunneling time target not reachable below the depth cap");

    // Tunneling time increases monotonically with depth on [E_R, cap].
    while ((hi - lo) > 1e-9 * hi)
        (time_at(0.5 * (lo + hi)) >= target_s ? hi : lo) = 0.5 * (lo + hi);
    return hi;
}

double depth_for_tunneling_time_au(const AtomSpecies& s, double wavelength_au, double target_s)
{
    double cap = units::make(100.0, "mK").au;
    return depth_for_tunneling_time_au(s, wavelength_au, target_s, cap);
}

double scattering_suppression(const AtomSpecies& s, const LatticeConfig& l)
{
    return 0.5 * std::sqrt(recoil_energy_au(s, l) / l.depth_au);
}

double max_optical_force_au(const LatticeConfig& l)
{
    return l.depth_au * l.wavenumber_au();
}

} // namespace mqc
