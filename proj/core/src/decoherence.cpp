#include "mqc/decoherence.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace mqc {

namespace {

constexpr double pi = std::numbers::pi;

double sinc(double u)
{
    if (std::abs(u) < 1e-4) {
        double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

} // namespace

double adiabaticity_suppression(double xi)
{
    if (xi < 0.0)
        throw DomainError("adiabaticity parameter must be non-negative");
    if (xi == 0.0)
        return 0.0;
    // Cancellation-free arrangement of xi^2/(xi^2-1)^2 (1 + xi^2 - 2 xi sin(pi/(2 xi))):
    // the removable point xi = 1 turns into a sinc evaluated near zero.
    double u = pi * (xi - 1.0) / (4.0 * xi);
    double s = sinc(u);
    double r = xi / (xi + 1.0);
    return r * r * (1.0 + pi * pi / (4.0 * xi) * s * s);
}

double heating_probability(const HeatingProblem& p)
{
    if (p.gap_au <= 0.0)
        throw DomainError("level gap must be positive");
    if (p.rabi_au < 0.0)
        throw DomainError("drive frequency must be non-negative");
    double a = p.element_au / p.gap_au;
    return a * a * adiabaticity_suppression(0.5 * p.rabi_au / p.gap_au);
}

GradientHeating gradient_heating(const AtomSpecies& s, const LatticeConfig& l,
                                 double gradient_au, double rabi_rad_s)
{
    GradientHeating r;
    r.trap_omega_au = trap_angular_frequency_au(s, l);
    r.osc_length_au = 1.0 / std::sqrt(2.0 * s.mass_au * r.trap_omega_au);
    double dmu = std::abs(s.mu_qubit1 - s.mu_qubit0) * consts::bohr_magneton_au;
    r.element_au = dmu * std::abs(gradient_au) * r.osc_length_au;
    double rabi_au = rabi_rad_s * consts::atomic_time_s;
    r.xi = 0.5 * rabi_au / r.trap_omega_au;
    r.probability = heating_probability({rabi_au, r.element_au, r.trap_omega_au});
    return r;
}

double splitting_heating_prefactor(double rabi_rad_s, double trap_omega_rad_s)
{
    if (trap_omega_rad_s <= 0.0)
        throw DomainError("trap frequency must be positive");
    return adiabaticity_suppression(rabi_rad_s / (4.0 * trap_omega_rad_s)) / 32.0;
}

double polarizability_heating(double rabi_rad_s, double trap_omega_rad_s,
                              double zeeman_split_au, double detuning_au)
{
    if (detuning_au == 0.0)
        throw DomainError("drive detuning must be nonzero");
    double ratio = zeeman_split_au / detuning_au;
    return splitting_heating_prefactor(rabi_rad_s, trap_omega_rad_s) * ratio * ratio;
}

double dephasing_error(const NoiseSpec& n)
{
    if (n.psd_au < 0.0)
        throw DomainError("noise power must be non-negative");
    if (n.duration_au < 0.0)
        throw DomainError("duration must be non-negative");
    return 4.0 * n.moment_au * n.moment_au * n.psd_au * n.duration_au;
}

double noise_tolerance_asd_au(double epsilon, double duration_au, double moment_au)
{
    if (epsilon <= 0.0)
        throw DomainError("target error must be positive");
    if (duration_au <= 0.0 || moment_au == 0.0)
        throw DomainError("tolerance needs a positive duration and a nonzero moment");
    return std::sqrt(epsilon / (4.0 * moment_au * moment_au * duration_au));
}

DephasingEstimate dephasing_monte_carlo(const NoiseSpec& n, long trials,
                                        std::uint64_t seed, int levels)
{
    if (n.psd_au < 0.0)
        throw DomainError("noise power must be non-negative");
    if (trials < 2)
        throw ConfigError("need at least two trials");
    if (levels < 0 || levels > 24)
        throw ConfigError("bridge depth out of range");

    double sum = 0.0;
    double sum2 = 0.0;
    std::vector<double> cur, half;
    for (long trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(trial)));
        std::normal_distribution<double> gauss;
        cur.assign(1, gauss(rng) * std::sqrt(n.psd_au * n.duration_au));
        double seg = n.duration_au;
        for (int lvl = 0; lvl < levels; ++lvl) {
            half.resize(cur.size() * 2);
            double sd = std::sqrt(0.25 * n.psd_au * seg);
            for (std::size_t i = 0; i < cur.size(); ++i) {
                double w = gauss(rng) * sd;
                half[2 * i] = 0.5 * cur[i] + w;
                half[2 * i + 1] = 0.5 * cur[i] - w;
            }
            cur.swap(half);
            seg *= 0.5;
        }
        double x = 0.0;
        for (double v : cur)
            x += v;
        double c = std::cos(2.0 * n.moment_au * x);
        sum += c;
        sum2 += c * c;
    }
    double mt = static_cast<double>(trials);
    double mean = sum / mt;
    double var = (sum2 - mt * mean * mean) / (mt - 1.0);
    if (var < 0.0)
        var = 0.0;

    DephasingEstimate e;
    e.estimate = 2.0 * (1.0 - mean);
    e.std_error = 2.0 * std::sqrt(var / mt);
    e.trials = trials;
    return e;
}

} // namespace mqc
