#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

using cd = std::complex<double>;
constexpr cd im{0.0, 1.0};
constexpr double mu_b = 0.5;

Eigen::Matrix2cd pauli_x()
{
    Eigen::Matrix2cd p;
    p << 0, 1, 1, 0;
    return p;
}

Eigen::Matrix2cd pauli_y()
{
    Eigen::Matrix2cd p;
    p << 0, -im, im, 0;
    return p;
}

Eigen::Matrix2cd pauli_z()
{
    Eigen::Matrix2cd p;
    p << 1, 0, 0, -1;
    return p;
}

} // namespace

std::vector<double> breit_rabi_levels(const mqc::AtomSpecies& s, double b_au)
{
    if (s.electronic_j != 0.5)
        throw std::invalid_argument("closed form needs J = 1/2");
    const double gj = s.lande_g();
    const double gi = s.nuclear_g_factor;
    const double i_spin = s.nuclear_spin;

    std::vector<double> e;
    if (i_spin == 0.0) {
        e = {0.5 * gj * mu_b * b_au, -0.5 * gj * mu_b * b_au};
    } else {
        const double a = s.hyperfine_a_au();
        const double de = a * (i_spin + 0.5);
        const double x = (gj - gi) * mu_b * b_au / de;
        e.push_back(0.5 * a * i_spin + (0.5 * gj + gi * i_spin) * mu_b * b_au);
        e.push_back(0.5 * a * i_spin - (0.5 * gj + gi * i_spin) * mu_b * b_au);
        for (double m = -(i_spin - 0.5); m <= i_spin - 0.5 + 1e-9; m += 1.0) {
            double root = std::sqrt(1.0 + 4.0 * m * x / (2.0 * i_spin + 1.0) + x * x);
            e.push_back(-0.25 * a + gi * mu_b * b_au * m + 0.5 * de * root);
            e.push_back(-0.25 * a + gi * mu_b * b_au * m - 0.5 * de * root);
        }
    }
    std::sort(e.begin(), e.end());
    return e;
}

double rabi_flop(double rabi, double delta, double t)
{
    const double w2 = rabi * rabi + delta * delta;
    if (w2 == 0.0)
        return 0.0;
    const double s = std::sin(0.5 * std::sqrt(w2) * t);
    return rabi * rabi / w2 * s * s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd site_op(const Eigen::Matrix2cd& op, int site, int n)
{
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = n - 1; k >= 0; --k)
        acc = kron(acc, k == site ? Eigen::MatrixXcd(op)
                                  : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    return acc;
}

Eigen::MatrixXcd dense_hamiltonian(const mqc::SpinChainModel& m)
{
    const int n = m.size();
    const long dim = 1l << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < n; ++i)
        h += m.omega_rad_s[i] * site_op(pauli_z(), i, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            h += m.g_rad_s(i, j)
                 * (site_op(pauli_z(), i, n) * site_op(pauli_z(), j, n)).eval();
    return h;
}

Eigen::MatrixXcd expm_herm(const Eigen::MatrixXcd& h, double t)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(h.rows());
    for (long k = 0; k < h.rows(); ++k)
        phases(k) = std::exp(-im * (es.eigenvalues()(k) * t));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd dense_pulse_unitary(const mqc::SpinChainModel& m, const mqc::Pulse& p)
{
    const int n = m.size();
    const double phi = p.azimuth();

    if (p.model == mqc::PulseModel::ideal) {
        Eigen::Matrix2cd r;
        const double c = std::cos(0.5 * p.angle_rad);
        const cd s = -im * std::sin(0.5 * p.angle_rad);
        r << c, s * std::exp(-im * phi), s * std::exp(im * phi), c;
        Eigen::MatrixXcd rot = site_op(r, p.site, n);
        if (p.duration_s <= 0.0)
            return rot;
        Eigen::MatrixXcd half = expm_herm(dense_hamiltonian(m), 0.5 * p.duration_s);
        return half * rot * half;
    }

    const double wc = p.carrier_rad_s != 0.0 ? p.carrier_rad_s : m.resonance_omega(p.site);
    Eigen::MatrixXcd h = dense_hamiltonian(m);
    Eigen::MatrixXcd sz_sum = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
    for (int i = 0; i < n; ++i) {
        sz_sum += site_op(pauli_z(), i, n);
        h += 0.5 * p.rabi_rad_s
             * (std::cos(phi) * site_op(pauli_x(), i, n)
                + std::sin(phi) * site_op(pauli_y(), i, n));
    }
    h += 0.5 * wc * sz_sum;
    return expm_herm(-0.5 * wc * sz_sum, p.duration_s) * expm_herm(h, p.duration_s);
}

Eigen::MatrixXcd dense_schedule_unitary(const mqc::SpinChainModel& m,
                                        const mqc::PulseSchedule& s)
{
    const long dim = 1l << m.size();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& ev : s.events) {
        if (std::holds_alternative<mqc::Delay>(ev))
            u = (expm_herm(dense_hamiltonian(m), std::get<mqc::Delay>(ev).duration_s) * u)
                    .eval();
        else
            u = (dense_pulse_unitary(m, std::get<mqc::Pulse>(ev)) * u).eval();
    }
    return u;
}

mqc::SpinChainModel random_model(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 3e5);
    std::uniform_real_distribution<double> mag(5.0, 40.0);
    std::bernoulli_distribution flip(0.5);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    mqc::SpinChainModel m;
    m.g_rad_s = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double transition = two_pi * (5e6 + 1e6 * i + jitter(rng));
        m.omega_rad_s.push_back(-0.5 * transition);
        m.position_m.push_back(1.25e-7 * i);
        m.mu_bar_mub.push_back(0.0);
        m.delta_mu_mub.push_back(1.0);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = double(j - i);
            double g = two_pi * mag(rng) / (d * d * d) * (flip(rng) ? 1.0 : -1.0);
            m.g_rad_s(i, j) = m.g_rad_s(j, i) = g;
        }
    return m;
}

mqc::SpinChainModel uniform_model(int n)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    mqc::SpinChainModel m;
    m.g_rad_s = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m.omega_rad_s.push_back(-0.5 * two_pi * (10e6 + 1e6 * i));
        m.position_m.push_back(1.25e-7 * i);
        m.mu_bar_mub.push_back(0.0);
        m.delta_mu_mub.push_back(1.0);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = double(j - i);
            m.g_rad_s(i, j) = m.g_rad_s(j, i) = -two_pi * 20.0 / (d * d * d);
        }
    return m;
}

} // namespace oracle
