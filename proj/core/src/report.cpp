#include "mqc/report.hpp"

#include "mqc/constants.hpp"
#include "mqc/decoherence.hpp"
#include "mqc/error.hpp"
#include "mqc/units.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mqc {

namespace {

constexpr double force_margin_floor = 100.0;

double in_unit(double au, units::Dim dim, const char* unit)
{
    return units::value_in({au, dim}, unit);
}

} // namespace

std::string format_value(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    if (ec != std::errc{})
        return "?";
    return std::string(buf, ptr);
}

bool FeasibilityReport::has(const std::string& id) const
{
    for (const auto& e : entries)
        if (e.id == id)
            return true;
    return false;
}

const ReportEntry& FeasibilityReport::at(const std::string& id) const
{
    for (const auto& e : entries)
        if (e.id == id)
            return e;
    throw ConfigError("report has no entry '" + id + "'");
}

int FeasibilityReport::exit_code() const
{
    int code = exit_ok;
    for (const auto& v : violations)
        if (code == exit_ok || v.code < code)
            code = v.code;
    return code;
}

std::string FeasibilityReport::to_text() const
{
    std::ostringstream out;
    for (const auto& e : entries) {
        std::string line = e.id;
        if (line.size() < 32)
            line.append(32 - line.size(), ' ');
        out << line << ' ' << format_value(e.value);
        if (!e.unit.empty())
            out << ' ' << e.unit;
        out << '\n';
    }
    for (const auto& v : violations)
        out << "violation(exit " << v.code << "): " << v.message << '\n';
    return out.str();
}

std::string FeasibilityReport::to_json() const
{
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries)
        j["entries"].push_back({{"id", e.id}, {"value", e.value}, {"unit", e.unit}});
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"code", v.code}, {"message", v.message}});
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

FeasibilityReport run_design(const ArchitectureConfig& c)
{
    const AtomSpecies& s = c.species;
    LatticeConfig lat = resolved_lattice(c);
    FeasibilityReport r;
    auto add = [&r](const char* id, double value, const char* unit = "") {
        r.entries.push_back({id, value, unit});
    };

    double recoil = recoil_energy_au(s, lat);
    add("lattice.depth", in_unit(lat.depth_au, units::Dim::energy, "mK"), "mK");
    add("lattice.recoil_energy", in_unit(recoil, units::Dim::energy, "uK"), "uK");
    add("lattice.depth_over_recoil", lat.depth_au / recoil);
    double trap_au = trap_angular_frequency_au(s, lat);
    add("lattice.trap_frequency", in_unit(trap_au, units::Dim::energy, "MHz"), "MHz");

    bool tunneling_ok = true;
    double hold_s = std::numeric_limits<double>::infinity();
    try {
        add("lattice.tunneling_rate", tunneling_rate_hz(s, lat), "Hz");
        hold_s = tunneling_time_s(s, lat);
        add("lattice.tunneling_time", hold_s, "s");
    } catch (const DomainError& e) {
        tunneling_ok = false;
        r.violations.push_back({exit_tunneling, e.what()});
    }
    add("lattice.scattering_suppression", scattering_suppression(s, lat));

    double margin = force_bound_margin(s, lat, c.gradient_au);
    add("lattice.max_force_margin", margin);
    if (!(margin >= force_margin_floor))
        r.violations.push_back(
            {exit_force_bound, "optical force margin " + format_value(margin)
                                   + " is below the required " + format_value(force_margin_floor)});

    if (tunneling_ok && c.tunneling_target_given && (c.depth_given || c.intensity_given)
        && hold_s < c.target_tunneling_time_s)
        r.violations.push_back(
            {exit_tunneling, "tunneling time " + format_value(hold_s)
                                 + " s misses the hold-time target "
                                 + format_value(c.target_tunneling_time_s) + " s"});

    bool coupled = s.mu_qubit1 != s.mu_qubit0;
    if (!coupled)
        r.violations.push_back(
            {exit_zero_coupling,
             s.name + ": qubit levels share one moment; no addressing or conditional shift"});

    double tau_not_s = std::numeric_limits<double>::infinity();
    double tau_cnot_s = 0.0;
    if (coupled) {
        add("addressing.not_resolution", 1.0 / c.target_not_time_s, "Hz");
        add("addressing.required_gradient",
            in_unit(gradient_for_not_time_au(s, lat, c.target_not_time_s),
                    units::Dim::field_gradient, "G/cm"),
            "G/cm");
        if (c.gradient_au > 0.0)
            tau_not_s = not_time_for_gradient_s(s, lat, c.gradient_au);
        add("addressing.not_time", 1e3 * tau_not_s, "ms");

        add("dipolar.cnot_shift", cnot_shift_hz(s, lat), "Hz");
        tau_cnot_s = cnot_time_s(s, lat);
        add("dipolar.cnot_time", 1e3 * tau_cnot_s, "ms");
    }

    double rabi_rad_s = std::isfinite(tau_not_s) ? std::numbers::pi / tau_not_s : 0.0;
    GradientHeating gh = gradient_heating(s, lat, c.gradient_au, rabi_rad_s);
    add("heating.gradient_excitation", gh.probability);
    add("heating.splitting_prefactor",
        splitting_heating_prefactor(rabi_rad_s, trap_au / consts::atomic_time_s));
    if (gh.probability > perturbative_limit)
        r.violations.push_back(
            {exit_perturbative, "gradient excitation " + format_value(gh.probability)
                                    + " exceeds the perturbative limit "
                                    + format_value(perturbative_limit)});

    if (coupled) {
        double moment_au = 0.5 * std::abs(s.mu_qubit1 - s.mu_qubit0) * consts::bohr_magneton_au;
        double tolerance_au = noise_tolerance_asd_au(c.error_budget,
                                                     tau_cnot_s / consts::atomic_time_s,
                                                     moment_au);
        add("dephasing.noise_tolerance",
            in_unit(tolerance_au, units::Dim::noise_asd, "T/sqrtHz"), "T/sqrtHz");
        add("throughput.cnot_ops", c.decoherence_time_s / tau_cnot_s);
    }

    return r;
}

} // namespace mqc
