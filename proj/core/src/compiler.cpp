#include "mqc/compiler.hpp"

#include "mqc/error.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <cmath>
#include <iterator>
#include <numbers>
#include <vector>

namespace mqc {

namespace {

constexpr double pi = std::numbers::pi;

// Nearest other-site transition spacing per site (rad/s).
std::vector<double> spectator_gaps(const SpinChainModel& m)
{
    const int n = m.size();
    std::vector<double> gap(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double best = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            double d = std::abs(m.transition_omega(i) - m.transition_omega(j));
            if (best == 0.0 || d < best)
                best = d;
        }
        gap[i] = best;
    }
    return gap;
}

// Largest drive <= ceiling that parks the nearest off-resonant site on a
// generalized-Rabi zero: sqrt(1 + (gap/Omega)^2) * angle = 2 pi k.
double snapped_rabi(double angle, double gap, double ceiling)
{
    if (gap <= 0.0)
        return ceiling;
    double r = gap / ceiling;
    double k = std::ceil(angle / (2.0 * pi) * std::sqrt(1.0 + r * r));
    double q = 2.0 * pi * k / angle;
    return gap / std::sqrt(q * q - 1.0);
}

// Lays out pulses and equal window delays, then assembles the schedule with
// every azimuth referred to the site's own rotating frame. Each site's last
// echo pi pulse also absorbs the site's total phase drift over the schedule
// (an X pair at azimuths a1, a2 injects a pure Z by 2(a2 - a1)), so the
// realized single-site operations close exactly with no trailing Z.
class Planner {
    struct Item;

  public:
    Planner(const SpinChainModel& m, const CompileOptions& opts) : m_(m), opts_(opts)
    {
        if (opts_.model == PulseModel::finite) {
            gaps_ = spectator_gaps(m);
            double global = 0.0;
            for (double g : gaps_)
                if (g > 0.0 && (global == 0.0 || g < global))
                    global = g;
            ceiling_ = opts_.rabi_rad_s > 0.0 ? opts_.rabi_rad_s : global / 50.0;
            if (ceiling_ <= 0.0)
                throw ConfigError("finite pulses need rabi_rad_s without a spectator spacing");
        }
    }

    void add(int site, Axis axis, double angle, bool echo_x)
    {
        Item it;
        it.site = site;
        it.axis = axis;
        it.angle = angle;
        it.echo_x = echo_x;
        if (opts_.model == PulseModel::finite) {
            it.rabi = snapped_rabi(std::abs(angle), gaps_[site], ceiling_);
            it.duration = std::abs(angle) / it.rabi;
        }
        items_.push_back(it);
    }

    void add_delay() { items_.push_back(Item{.delay = true}); }

    // Echo-pulse time spent on sites other than a and b; those windows keep
    // accumulating the (a,b) coupling phase while pulses on a or b do not.
    double echo_time_excluding(int a, int b) const
    {
        double sum = 0.0;
        for (const auto& it : items_)
            if (!it.delay && it.echo_x && it.site != a && it.site != b)
                sum += it.duration;
        return sum;
    }

    double pulse_time() const
    {
        double sum = 0.0;
        for (const auto& it : items_)
            if (!it.delay)
                sum += it.duration;
        return sum;
    }

    // Deterministic z-angle a finite pulse on it.site leaves on spectator s,
    // relative to the free flight the ledger otherwise assumes: the polar
    // part of the spectator's two-level propagator plus the frame mismatch.
    // At the snapped generalized-Rabi zero the propagator is exactly +-1, so
    // this closes the drive's phase back-action completely.
    double spectator_chi(const Item& it, int s) const
    {
        double d = m_.omega_rad_s[s] + 0.5 * m_.transition_omega(it.site);
        double w = std::sqrt(4.0 * d * d + it.rabi * it.rabi);
        double half = 0.5 * w * it.duration;
        std::complex<double> a(std::cos(half), -2.0 * d / w * std::sin(half));
        return -2.0 * (d * it.duration + std::arg(a));
    }

    PulseSchedule assemble(double window_delay) const
    {
        const int n = m_.size();
        double total = pulse_time();
        for (const auto& it : items_)
            if (it.delay)
                total += window_delay;

        std::vector<std::ptrdiff_t> last_echo(n, -1);
        for (std::ptrdiff_t i = 0; i < std::ssize(items_); ++i)
            if (!items_[i].delay && items_[i].echo_x)
                last_echo[items_[i].site] = i;

        const bool finite = opts_.model == PulseModel::finite;
        std::vector<double> chi_total(n, 0.0);
        if (finite)
            for (const auto& it : items_)
                if (!it.delay)
                    for (int s = 0; s < n; ++s)
                        if (s != it.site)
                            chi_total[s] += spectator_chi(it, s);

        PulseSchedule sched;
        std::vector<double> kappa(n, 0.0);
        std::vector<double> chi(n, 0.0);
        double t = 0.0;
        for (std::ptrdiff_t i = 0; i < std::ssize(items_); ++i) {
            const auto& it = items_[i];
            if (it.delay) {
                sched.events.push_back(Delay{window_delay});
                t += window_delay;
                continue;
            }
            double w = m_.omega_rad_s[it.site];
            double extra = 2.0 * w * t + chi[it.site] + kappa[it.site];
            if (i == last_echo[it.site]) {
                double psi = -w * total - 0.5 * chi_total[it.site] - 0.5 * kappa[it.site];
                extra += psi;
                kappa[it.site] += 2.0 * psi;
            }
            extra = std::remainder(extra, 2.0 * pi);
            if (opts_.model == PulseModel::ideal) {
                Pulse p = ideal_pulse(it.site, it.axis, it.angle, 0.0);
                p.phase_rad = extra;
                sched.events.push_back(p);
            } else {
                sched.events.push_back(finite_pulse(it.site, it.axis, it.angle, it.rabi,
                                                    m_.transition_omega(it.site), extra));
                for (int s = 0; s < n; ++s)
                    if (s != it.site)
                        chi[s] += spectator_chi(it, s);
            }
            t += it.duration;
        }
        return sched;
    }

  private:
    struct Item {
        bool delay = false;
        int site = 0;
        Axis axis = Axis::x;
        double angle = 0.0;
        bool echo_x = false;
        double rabi = 0.0;
        double duration = 0.0;
    };

    const SpinChainModel& m_;
    CompileOptions opts_;
    std::vector<double> gaps_;
    double ceiling_ = 0.0;
    std::vector<Item> items_;
};

void check_site(const SpinChainModel& m, int site)
{
    if (site < 0 || site >= m.size())
        throw ConfigError("site index out of range");
}

} // namespace

PulseSchedule compile_not(const SpinChainModel& m, int site, const CompileOptions& opts)
{
    check_site(m, site);
    double tau;
    if (m.size() >= 2) {
        double split = m.min_neighbor_splitting_hz();
        if (split <= 0.0)
            throw DomainError("neighbouring transitions are degenerate; no addressing window");
        tau = 1.0 / split;
    } else {
        if (opts.rabi_rad_s <= 0.0)
            throw ConfigError("single-site chain needs rabi_rad_s to set the pulse length");
        tau = pi / opts.rabi_rad_s;
    }

    PulseSchedule sched;
    if (opts.model == PulseModel::ideal)
        sched.events.push_back(ideal_pulse(site, Axis::x, pi, tau));
    else
        sched.events.push_back(finite_pulse(site, Axis::x, pi, pi / tau,
                                            m.resonance_omega(site)));
    return sched;
}

PulseSchedule compile_cnot(const SpinChainModel& m, int control, int target,
                           const CompileOptions& opts)
{
    check_site(m, control);
    check_site(m, target);
    if (control == target)
        throw ConfigError("control and target must differ");
    const double g = m.g_rad_s(control, target);
    if (g == 0.0)
        throw DomainError("zero coupling between control and target");

    const int n = m.size();
    const double s_target = pi / (4.0 * std::abs(g));
    const double theta_z = g > 0.0 ? -0.5 * pi : 0.5 * pi;

    // Walsh rows over 2^ceil segments: control and target share row 1 so
    // their coupling survives every delay; all other pairs sit on mutually
    // orthogonal sign patterns and refocus.
    std::vector<unsigned> row(n);
    row[control] = row[target] = 1;
    unsigned next = 2;
    for (int i = 0; i < n; ++i)
        if (i != control && i != target)
            row[i] = next++;
    int segs = 2;
    while (segs < n)
        segs *= 2;
    auto sign = [&](int i, int k) {
        return std::popcount(row[i] & static_cast<unsigned>(k)) % 2 == 0 ? 1 : -1;
    };

    Planner plan(m, opts);
    plan.add(target, Axis::y, -0.5 * pi, false);
    for (int k = 0; k < segs; ++k) {
        plan.add_delay();
        if (k + 1 < segs)
            for (int i = 0; i < n; ++i)
                if (sign(i, k) != sign(i, k + 1))
                    plan.add(i, Axis::x, pi, true);
    }
    for (int i = 0; i < n; ++i)
        if (sign(i, segs - 1) < 0)
            plan.add(i, Axis::x, pi, true);
    // Conditional-Z residue: Rz(theta_z) on both qubits via
    // Rx(pi/2), Ry(-theta_z), Rx(-pi/2), then undo the target basis change.
    for (int s : {control, target}) {
        plan.add(s, Axis::x, 0.5 * pi, false);
        plan.add(s, Axis::y, -theta_z, false);
        plan.add(s, Axis::x, -0.5 * pi, false);
    }
    plan.add(target, Axis::y, 0.5 * pi, false);

    const double spectator = plan.echo_time_excluding(control, target);
    const double d = (s_target - spectator) / segs;
    if (d < 0.0)
        throw DomainError("spectator echo pulses do not fit inside the coupling window");
    return plan.assemble(d);
}

PulseSchedule invert_population_echo(const SpinChainModel& m, const std::vector<int>& sites,
                                     double total_time_s, const CompileOptions& opts)
{
    if (sites.empty())
        throw ConfigError("no sites to echo");
    if (total_time_s < 0.0)
        throw ConfigError("echo time must be non-negative");
    std::vector<int> order(sites);
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) {
        check_site(m, order[i]);
        if (i > 0 && order[i] == order[i - 1])
            throw ConfigError("duplicate site in echo set");
    }

    Planner plan(m, opts);
    for (int s : order)
        plan.add(s, Axis::x, pi, true);
    plan.add_delay();
    for (int s : order)
        plan.add(s, Axis::x, pi, true);
    plan.add_delay();

    const double d = 0.5 * (total_time_s - plan.pulse_time());
    if (d < 0.0)
        throw DomainError("echo time shorter than the two pulse groups");
    return plan.assemble(d);
}

} // namespace mqc
