#include "mqc/chain.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"
#include "mqc/zeeman.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace mqc {

namespace {

using nlohmann::json;
constexpr double two_pi = 2.0 * std::numbers::pi;

double rad_s_from_au(double energy_au)
{
    return energy_au / consts::atomic_time_s;
}

} // namespace

double SpinChainModel::resonance_omega(int i) const
{
    double w = transition_omega(i);
    for (int j = 0; j < size(); ++j)
        if (j != i)
            w -= 2.0 * g_rad_s(i, j);
    return w;
}

double SpinChainModel::min_neighbor_splitting_hz() const
{
    if (size() < 2)
        throw DomainError("neighbour splitting needs at least two sites");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < size(); ++i) {
        double df = std::abs(transition_omega(i + 1) - transition_omega(i)) / two_pi;
        best = std::min(best, df);
    }
    return best;
}

std::string SpinChainModel::to_json() const
{
    json j;
    j["sites"] = size();
    j["omega_rad_s"] = omega_rad_s;
    j["position_m"] = position_m;
    j["mu_bar_mub"] = mu_bar_mub;
    j["delta_mu_mub"] = delta_mu_mub;
    std::vector<std::vector<double>> g;
    for (int a = 0; a < size(); ++a)
        g.emplace_back(g_rad_s.row(a).begin(), g_rad_s.row(a).end());
    j["g_rad_s"] = g;
    return j.dump(2);
}

SpinChainModel SpinChainModel::from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad chain model json: ") + e.what());
    }
    SpinChainModel m;
    try {
        int n = j.at("sites").get<int>();
        m.omega_rad_s = j.at("omega_rad_s").get<std::vector<double>>();
        m.position_m = j.at("position_m").get<std::vector<double>>();
        m.mu_bar_mub = j.at("mu_bar_mub").get<std::vector<double>>();
        m.delta_mu_mub = j.at("delta_mu_mub").get<std::vector<double>>();
        auto g = j.at("g_rad_s").get<std::vector<std::vector<double>>>();
        if (n <= 0 || static_cast<int>(m.omega_rad_s.size()) != n
            || static_cast<int>(g.size()) != n)
            throw ConfigError("chain model arrays inconsistent with 'sites'");
        m.g_rad_s.resize(n, n);
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(g[a].size()) != n)
                throw ConfigError("chain model coupling matrix not square");
            for (int b = 0; b < n; ++b)
                m.g_rad_s(a, b) = g[a][b];
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad chain model json: ") + e.what());
    }
    return m;
}

SpinChainModel build_chain(const AtomSpecies& s, const LatticeConfig& l,
                           const FieldProfile& f, int sites)
{
    if (sites < 1)
        throw ConfigError("chain needs at least one site");

    const double spacing = l.site_spacing_au();
    const double a2 = consts::fine_structure * consts::fine_structure;

    SpinChainModel m;
    m.omega_rad_s.resize(sites);
    m.position_m.resize(sites);
    m.mu_bar_mub.resize(sites);
    m.delta_mu_mub.resize(sites);
    m.g_rad_s = Eigen::MatrixXd::Zero(sites, sites);

    std::vector<double> z(sites), dmu(sites), mbar(sites);
    for (int i = 0; i < sites; ++i) {
        z[i] = i * spacing;
        double b = f.bias_au + f.gradient_au * z[i];
        if (!(b > 0.0))
            throw DomainError("field must stay positive along the chain");
        auto sl = qubit_slopes(s, b);
        dmu[i] = 0.5 * (sl.upper_au - sl.lower_au);
        mbar[i] = 0.5 * (sl.upper_au + sl.lower_au);
        m.position_m[i] = z[i] * consts::bohr_m;
        m.mu_bar_mub[i] = mbar[i] / consts::bohr_magneton_au;
        m.delta_mu_mub[i] = dmu[i] / consts::bohr_magneton_au;
    }

    for (int i = 0; i < sites; ++i) {
        double b = f.bias_au + f.gradient_au * z[i];
        double w = -dmu[i] * b;
        for (int j = 0; j < sites; ++j) {
            if (j == i)
                continue;
            double r3 = std::pow(std::abs(z[i] - z[j]), 3.0);
            w += 2.0 * a2 * mbar[j] * dmu[i] / r3;
            if (j > i)
                m.g_rad_s(i, j) = rad_s_from_au(-2.0 * a2 * dmu[i] * dmu[j] / r3);
        }
        m.omega_rad_s[i] = rad_s_from_au(w);
    }
    for (int i = 0; i < sites; ++i)
        for (int j = 0; j < i; ++j)
            m.g_rad_s(i, j) = m.g_rad_s(j, i);

    return m;
}

double cnot_shift_hz(const AtomSpecies& s, const LatticeConfig& l)
{
    double dmu_au = (s.mu_qubit1 - s.mu_qubit0) * consts::bohr_magneton_au;
    double r = l.site_spacing_au();
    double shift_au = 2.0 * consts::fine_structure * consts::fine_structure
                      * dmu_au * dmu_au / (r * r * r);
    if (shift_au == 0.0)
        throw DomainError(s.name + ": zero moment difference, no conditional shift");
    return shift_au / (two_pi * consts::atomic_time_s);
}

double cnot_time_s(const AtomSpecies& s, const LatticeConfig& l)
{
    return 1.0 / (two_pi * cnot_shift_hz(s, l));
}

double gradient_for_not_time_au(const AtomSpecies& s, const LatticeConfig& l, double tau_not_s)
{
    if (!(tau_not_s > 0.0))
        throw ConfigError("NOT time must be positive");
    double dmu_au = (s.mu_qubit1 - s.mu_qubit0) * consts::bohr_magneton_au;
    if (dmu_au == 0.0)
        throw DomainError(s.name + ": zero moment difference, sites cannot be resolved");
    // Enforced neighbour spacing Delta_nu = 1/tau (ordinary Hz).
    double de_au = (two_pi * consts::atomic_time_s) / tau_not_s;
    return de_au / (dmu_au * l.site_spacing_au());
}

double not_time_for_gradient_s(const AtomSpecies& s, const LatticeConfig& l, double gradient_au)
{
    if (!(gradient_au > 0.0))
        throw ConfigError("gradient must be positive");
    double dmu_au = (s.mu_qubit1 - s.mu_qubit0) * consts::bohr_magneton_au;
    if (dmu_au == 0.0)
        throw DomainError(s.name + ": zero moment difference, sites cannot be resolved");
    double de_au = dmu_au * gradient_au * l.site_spacing_au();
    return (two_pi * consts::atomic_time_s) / de_au;
}

double force_bound_margin(const AtomSpecies& s, const LatticeConfig& l, double gradient_au)
{
    double mu_max = std::max(std::abs(s.mu_qubit1), std::abs(s.mu_qubit0))
                    * consts::bohr_magneton_au;
    double f_mag = mu_max * std::abs(gradient_au);
    if (f_mag == 0.0)
        return std::numeric_limits<double>::infinity();
    return max_optical_force_au(l) / f_mag;
}

} // namespace mqc
