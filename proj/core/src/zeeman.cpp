#include "mqc/zeeman.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>

namespace mqc {

namespace {

struct BasisState {
    double mj;
    double mi;
};

double asymptotic_slope(const AtomSpecies& s, const BasisState& b)
{
    return consts::bohr_magneton_au * (s.lande_g() * b.mj + s.nuclear_g_factor * b.mi);
}

} // namespace

std::vector<ZeemanLevel> zeeman_map(const AtomSpecies& s, double field_au)
{
    const double I = s.nuclear_spin;
    const double J = s.electronic_j;
    const double A = s.hyperfine_a_au();
    const double gj = s.lande_g();
    const double gi = s.nuclear_g_factor;
    const double mu_b = consts::bohr_magneton_au;

    // H conserves M_F = M_J + M_I, so diagonalize block by block. Within one
    // block eigenvalues never cross as a function of B, so the k-th eigenvalue
    // (ascending) adiabatically connects to the basis state with the k-th
    // smallest strong-field slope. That assignment is the label.
    std::map<long, std::vector<BasisState>> blocks;
    for (double mj = -J; mj <= J + 1e-9; mj += 1.0)
        for (double mi = -I; mi <= I + 1e-9; mi += 1.0)
            blocks[std::lround(2.0 * (mj + mi))].push_back({mj, mi});

    std::vector<ZeemanLevel> levels;
    levels.reserve(s.levels());

    for (auto& [mf2, states] : blocks) {
        std::sort(states.begin(), states.end(), [&](const BasisState& a, const BasisState& b) {
            double sa = asymptotic_slope(s, a);
            double sb = asymptotic_slope(s, b);
            if (sa != sb)
                return sa < sb;
            return a.mj < b.mj;
        });

        const int n = static_cast<int>(states.size());
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
        for (int a = 0; a < n; ++a) {
            h(a, a) = A * states[a].mj * states[a].mi
                      + mu_b * field_au * (gj * states[a].mj + gi * states[a].mi);
            for (int b = 0; b < n; ++b) {
                if (states[b].mj == states[a].mj + 1.0 && states[b].mi == states[a].mi - 1.0) {
                    double jp = std::sqrt(J * (J + 1.0) - states[a].mj * (states[a].mj + 1.0));
                    double im = std::sqrt(I * (I + 1.0) - states[a].mi * (states[a].mi - 1.0));
                    h(b, a) = 0.5 * A * jp * im;
                    h(a, b) = h(b, a);
                }
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        for (int k = 0; k < n; ++k) {
            ZeemanLevel lv;
            lv.field_au = field_au;
            lv.energy_au = es.eigenvalues()(k);
            lv.mj = states[k].mj;
            lv.mi = states[k].mi;
            double slope = 0.0;
            for (int a = 0; a < n; ++a) {
                double w = es.eigenvectors()(a, k);
                slope += w * w * asymptotic_slope(s, states[a]);
            }
            lv.energy_slope_au = slope;
            lv.magnetic_moment_au = -slope;
            levels.push_back(lv);
        }
    }

    std::sort(levels.begin(), levels.end(), [](const ZeemanLevel& a, const ZeemanLevel& b) {
        return a.energy_au < b.energy_au;
    });
    return levels;
}

QubitLevels qubit_levels(const AtomSpecies& s, double field_au)
{
    auto levels = zeeman_map(s, field_au);
    const ZeemanLevel* up = nullptr;
    const ZeemanLevel* lo = nullptr;
    for (const auto& lv : levels) {
        if (std::abs(lv.mi - s.qubit_m_i) > 1e-9)
            continue;
        if (std::abs(lv.mj - s.electronic_j) < 1e-9)
            up = &lv;
        if (std::abs(lv.mj + s.electronic_j) < 1e-9)
            lo = &lv;
    }
    if (!up || !lo)
        throw DomainError(s.name + ": qubit levels (M_J = +-J, M_I = qubit_m_i) not found");
    return {*up, *lo};
}

double qubit_transition_energy_au(const AtomSpecies& s, double field_au)
{
    auto q = qubit_levels(s, field_au);
    double de = q.upper.energy_au - q.lower.energy_au;
    double scale = std::max(std::abs(q.upper.energy_au) + std::abs(q.lower.energy_au), 1e-300);
    if (std::abs(de) <= 1e-12 * scale || de == 0.0)
        throw DomainError(s.name + ": qubit levels degenerate at this field");
    return de;
}

QubitSlopes qubit_slopes(const AtomSpecies& s, double field_au)
{
    auto q = qubit_levels(s, field_au);
    return {q.upper.energy_slope_au, q.lower.energy_slope_au};
}

} // namespace mqc
