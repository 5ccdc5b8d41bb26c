#include "mqc/compiler.hpp"
#include "mqc/config.hpp"
#include "mqc/constants.hpp"
#include "mqc/decoherence.hpp"
#include "mqc/error.hpp"
#include "mqc/report.hpp"
#include "mqc/simulator.hpp"
#include "mqc/units.hpp"

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>

#include <clocale>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mqc;

namespace {

struct GlobalArgs {
    std::string config_path;
    std::string out_dir;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void print_kv(std::ostream& out, const std::string& key, const std::string& value)
{
    std::string line = key;
    if (line.size() < 32)
        line.append(32 - line.size(), ' ');
    out << line << ' ' << value << '\n';
}

ArchitectureConfig load_config(const GlobalArgs& g)
{
    if (g.config_path.empty())
        throw ConfigError("this command needs --config PATH");
    return ArchitectureConfig::from_file(g.config_path);
}

fs::path ensure_out_dir(const std::string& dir)
{
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
    return p;
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream out(p);
    if (!out)
        throw ConfigError("cannot write '" + p.string() + "'");
    out << text;
}

std::vector<double> parse_value_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos)
            continue;
        size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad sweep value '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size())
            throw ConfigError("bad sweep value '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int cmd_design(const GlobalArgs& g)
{
    ArchitectureConfig cfg = load_config(g);
    FeasibilityReport rep;
    try {
        rep = run_design(cfg);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_tunneling;
    }

    if (g.format == "structured")
        std::cout << rep.to_json();
    else
        std::cout << rep.to_text();

    if (!g.out_dir.empty()) {
        fs::path out = ensure_out_dir(g.out_dir);
        write_file(out / "report.json", rep.to_json());
        write_file(out / "chain.json", chain_model(cfg).to_json());
    }
    return rep.exit_code();
}

int cmd_simulate(const GlobalArgs& g, const std::string& gate, int site, int control, int target)
{
    ArchitectureConfig cfg = load_config(g);
    SpinChainModel m = chain_model(cfg);
    const int n = m.size();

    CompileOptions copts;
    copts.model = cfg.pulse_model;
    copts.rabi_rad_s = cfg.rabi_rad_s;
    SimOptions sopts;
    sopts.step_scale = cfg.step_scale;

    PulseSchedule sched;
    Eigen::MatrixXcd reference;
    if (gate == "cnot") {
        if (control == target)
            throw ConfigError("simulate: control and target must differ");
        if (control < 0 || control >= n || target < 0 || target >= n)
            throw ConfigError("simulate: control/target outside the chain");
        if (m.g_rad_s(control, target) == 0.0) {
            std::cerr << "error: zero coupling between sites " << control << " and " << target
                      << '\n';
            return exit_zero_coupling;
        }
        sched = compile_cnot(m, control, target, copts);
        if (n <= max_unitary_sites)
            reference = ideal_cnot_unitary(n, control, target);
    } else if (gate == "not") {
        if (site < 0 || site >= n)
            throw ConfigError("simulate: site outside the chain");
        sched = compile_not(m, site, copts);
        if (n <= max_unitary_sites) {
            // Reference with the same timing but exact rotations, so the
            // comparison measures pulse imperfections rather than the free
            // phase evolution the single pulse never echoes away.
            CompileOptions ideal = copts;
            ideal.model = PulseModel::ideal;
            reference = schedule_unitary(m, compile_not(m, site, ideal), sopts);
        }
    } else {
        throw ConfigError("simulate: unknown gate '" + gate + "' (use not or cnot)");
    }

    std::ostringstream text;
    std::string report_json;
    if (n <= max_unitary_sites) {
        GateReport rep = grade_gate(m, sched, reference, sopts);
        report_json = rep.to_json();
        print_kv(text, "simulate.gate", gate);
        print_kv(text, "simulate.sites", format_value(n));
        print_kv(text, "simulate.fidelity", format_value(rep.fidelity));
        print_kv(text, "simulate.duration", format_value(rep.duration_s) + " s");
        print_kv(text, "simulate.pulses", format_value(rep.pulse_count));
        for (size_t i = 0; i < rep.crosstalk.size(); ++i)
            print_kv(text, "simulate.crosstalk[" + std::to_string(i) + "]",
                     format_value(rep.crosstalk[i]));
    } else {
        print_kv(text, "simulate.gate", gate);
        print_kv(text, "simulate.sites", format_value(n));
        print_kv(text, "simulate.duration", format_value(sched.total_time_s()) + " s");
        print_kv(text, "simulate.note", "fidelity grading needs "
                                            + std::to_string(max_unitary_sites)
                                            + " sites or fewer");
        json j;
        j["gate"] = gate;
        j["sites"] = n;
        j["duration_s"] = sched.total_time_s();
        report_json = j.dump(2) + "\n";
    }

    if (g.format == "structured")
        std::cout << report_json;
    else
        std::cout << text.str();

    if (!g.out_dir.empty()) {
        fs::path out = ensure_out_dir(g.out_dir);
        write_file(out / "schedule.json", sched.to_json());
        write_file(out / "gate.json", report_json);
        ChainState fin = run_schedule(ChainState::basis(n, 0), m, sched, sopts);
        std::ostringstream csv;
        csv << "basis,re,im\n";
        for (int b = 0; b < fin.amp.size(); ++b)
            csv << b << ',' << format_value(fin.amp[b].real()) << ','
                << format_value(fin.amp[b].imag()) << '\n';
        write_file(out / "state.csv", csv.str());
    }
    return exit_ok;
}

struct SweepPlan {
    std::string value_header;
    std::vector<std::string> columns;
};

SweepPlan sweep_plan(const std::string& param)
{
    if (param == "wavelength")
        return {"wavelength_nm", {"depth_mK", "recoil_uK", "cnot_shift_hz", "cnot_time_ms"}};
    if (param == "depth")
        return {"depth_mK",
                {"tunneling_rate_hz", "tunneling_time_s", "trap_frequency_mhz",
                 "scattering_suppression"}};
    if (param == "gradient")
        return {"gradient_g_cm", {"not_time_ms", "force_margin", "gradient_excitation"}};
    if (param == "mu")
        return {"mu_mub", {"cnot_shift_hz", "cnot_time_ms"}};
    if (param == "psd")
        return {"psd_t2_hz", {"dephasing_error"}};
    if (param == "xi")
        return {"xi", {"suppression"}};
    throw ConfigError("sweep: unknown parameter '" + param
                      + "' (wavelength, depth, gradient, mu, psd, xi)");
}

std::vector<double> sweep_row(const ArchitectureConfig& cfg, const std::string& param, double v)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    auto in_unit = [](double au, units::Dim dim, const char* unit) {
        return units::value_in({au, dim}, unit);
    };

    if (param == "wavelength") {
        ArchitectureConfig c = cfg;
        c.wavelength_au = units::make(v, "nm").au;
        LatticeConfig lat = resolved_lattice(c);
        return {in_unit(lat.depth_au, units::Dim::energy, "mK"),
                in_unit(recoil_energy_au(c.species, lat), units::Dim::energy, "uK"),
                cnot_shift_hz(c.species, lat), 1e3 * cnot_time_s(c.species, lat)};
    }
    if (param == "depth") {
        ArchitectureConfig c = cfg;
        c.depth_given = true;
        c.intensity_given = false;
        c.depth_au = units::make(v, "mK").au;
        LatticeConfig lat = resolved_lattice(c);
        double rate = nan;
        double hold = nan;
        try {
            rate = tunneling_rate_hz(c.species, lat);
            hold = tunneling_time_s(c.species, lat);
        } catch (const DomainError&) {
        }
        return {rate, hold,
                in_unit(trap_angular_frequency_au(c.species, lat), units::Dim::energy, "MHz"),
                scattering_suppression(c.species, lat)};
    }
    if (param == "gradient") {
        LatticeConfig lat = resolved_lattice(cfg);
        double grad_au = units::make(v, "G/cm").au;
        double tau = v > 0.0 ? not_time_for_gradient_s(cfg.species, lat, grad_au)
                             : std::numeric_limits<double>::infinity();
        double rabi = v > 0.0 ? std::numbers::pi / tau : 0.0;
        return {1e3 * tau, force_bound_margin(cfg.species, lat, grad_au),
                gradient_heating(cfg.species, lat, grad_au, rabi).probability};
    }
    if (param == "mu") {
        ArchitectureConfig c = cfg;
        c.species.mu_qubit1 = v;
        c.species.mu_qubit0 = -v;
        LatticeConfig lat = resolved_lattice(c);
        double shift = nan;
        double tau = nan;
        try {
            shift = cnot_shift_hz(c.species, lat);
            tau = 1e3 * cnot_time_s(c.species, lat);
        } catch (const DomainError&) {
        }
        return {shift, tau};
    }
    if (param == "psd") {
        LatticeConfig lat = resolved_lattice(cfg);
        NoiseSpec n;
        n.psd_au = units::make(v, "T^2/Hz").au;
        n.duration_au = cnot_time_s(cfg.species, lat) / consts::atomic_time_s;
        n.moment_au = 0.5 * std::abs(cfg.species.mu_qubit1 - cfg.species.mu_qubit0)
                      * consts::bohr_magneton_au;
        return {dephasing_error(n)};
    }
    return {adiabaticity_suppression(v)};
}

int cmd_sweep(const GlobalArgs& g, const std::string& param, const std::string& values,
              double from, double to, int points)
{
    ArchitectureConfig cfg = load_config(g);
    SweepPlan plan = sweep_plan(param);

    std::vector<double> xs;
    if (!values.empty()) {
        if (points > 0)
            throw ConfigError("sweep: give --values or --from/--to/--points, not both");
        xs = parse_value_list(values);
    } else if (points > 0) {
        if (points == 1)
            xs.push_back(from);
        else
            for (int i = 0; i < points; ++i)
                xs.push_back(from + (to - from) * i / (points - 1));
    }

    std::ostringstream csv;
    csv << plan.value_header;
    for (const auto& c : plan.columns)
        csv << ',' << c;
    csv << '\n';
    for (double v : xs) {
        csv << format_value(v);
        for (double y : sweep_row(cfg, param, v))
            csv << ',' << format_value(y);
        csv << '\n';
    }

    if (!g.out_dir.empty())
        write_file(ensure_out_dir(g.out_dir) / "sweep.csv", csv.str());
    else
        std::cout << csv.str();
    return exit_ok;
}

int cmd_heating(const GlobalArgs& g)
{
    ArchitectureConfig cfg = load_config(g);
    LatticeConfig lat = resolved_lattice(cfg);

    double rabi_rad_s = cfg.rabi_rad_s;
    if (rabi_rad_s <= 0.0 && cfg.gradient_au > 0.0
        && cfg.species.mu_qubit1 != cfg.species.mu_qubit0)
        rabi_rad_s = std::numbers::pi
                     / not_time_for_gradient_s(cfg.species, lat, cfg.gradient_au);

    GradientHeating gh = gradient_heating(cfg.species, lat, cfg.gradient_au, rabi_rad_s);
    double trap_rad_s = gh.trap_omega_au / consts::atomic_time_s;
    double prefactor = splitting_heating_prefactor(rabi_rad_s, trap_rad_s);

    if (g.format == "structured") {
        json j;
        j["rabi_rad_s"] = rabi_rad_s;
        j["xi"] = gh.xi;
        j["element_au"] = gh.element_au;
        j["osc_length_nm"] = units::value_in({gh.osc_length_au, units::Dim::length}, "nm");
        j["trap_frequency_mhz"] =
            units::value_in({gh.trap_omega_au, units::Dim::energy}, "MHz");
        j["gradient_excitation"] = gh.probability;
        j["splitting_prefactor"] = prefactor;
        std::cout << j.dump(2) << '\n';
    } else {
        print_kv(std::cout, "heating.rabi", format_value(rabi_rad_s) + " rad/s");
        print_kv(std::cout, "heating.xi", format_value(gh.xi));
        print_kv(std::cout, "heating.element", format_value(gh.element_au) + " au");
        print_kv(std::cout, "heating.osc_length",
                 format_value(units::value_in({gh.osc_length_au, units::Dim::length}, "nm"))
                     + " nm");
        print_kv(std::cout, "heating.trap_frequency",
                 format_value(units::value_in({gh.trap_omega_au, units::Dim::energy}, "MHz"))
                     + " MHz");
        print_kv(std::cout, "heating.gradient_excitation", format_value(gh.probability));
        print_kv(std::cout, "heating.splitting_prefactor", format_value(prefactor));
    }
    return gh.probability > perturbative_limit ? exit_perturbative : exit_ok;
}

int cmd_dephase(const GlobalArgs& g, const std::string& psd_text,
                const std::string& duration_text, long trials)
{
    ArchitectureConfig cfg = load_config(g);
    LatticeConfig lat = resolved_lattice(cfg);

    NoiseSpec n;
    n.psd_au = units::parse_as(psd_text, units::Dim::noise_psd).au;
    n.moment_au = 0.5 * std::abs(cfg.species.mu_qubit1 - cfg.species.mu_qubit0)
                  * consts::bohr_magneton_au;
    double duration_s = duration_text.empty()
                            ? cnot_time_s(cfg.species, lat)
                            : units::parse_as(duration_text, units::Dim::time).au
                                  * consts::atomic_time_s;
    n.duration_au = duration_s / consts::atomic_time_s;

    std::uint64_t seed = g.seed_set ? g.seed : cfg.seed;
    double analytic = dephasing_error(n);
    DephasingEstimate mc = dephasing_monte_carlo(n, trials, seed);
    double tolerance_au = noise_tolerance_asd_au(cfg.error_budget, n.duration_au, n.moment_au);
    double tolerance_t = units::value_in({tolerance_au, units::Dim::noise_asd}, "T/sqrtHz");

    if (g.format == "structured") {
        json j;
        j["duration_s"] = duration_s;
        j["analytic_error"] = analytic;
        j["mc_error"] = mc.estimate;
        j["mc_std_error"] = mc.std_error;
        j["trials"] = mc.trials;
        j["seed"] = seed;
        j["tolerance_asd_t_sqrthz"] = tolerance_t;
        std::cout << j.dump(2) << '\n';
    } else {
        print_kv(std::cout, "dephase.duration", format_value(duration_s) + " s");
        print_kv(std::cout, "dephase.analytic_error", format_value(analytic));
        print_kv(std::cout, "dephase.mc_error", format_value(mc.estimate));
        print_kv(std::cout, "dephase.mc_std_error", format_value(mc.std_error));
        print_kv(std::cout, "dephase.trials", format_value(static_cast<double>(mc.trials)));
        print_kv(std::cout, "dephase.tolerance_asd",
                 format_value(tolerance_t) + " T/sqrtHz");
    }
    return exit_ok;
}

int cmd_catalog(const GlobalArgs& g, const std::string& species_file)
{
    SpeciesCatalog cat = species_file.empty() ? SpeciesCatalog::builtin()
                                              : SpeciesCatalog::from_file(species_file);
    if (g.format == "structured") {
        json arr = json::array();
        for (const auto& name : cat.names()) {
            const AtomSpecies& s = cat.get(name);
            json j;
            j["name"] = s.name;
            j["mass_u"] = s.mass_au / consts::amu_me;
            j["nuclear_spin"] = s.nuclear_spin;
            j["electronic_j"] = s.electronic_j;
            j["hfs_splitting_mhz"] =
                units::value_in({s.hfs_splitting_au, units::Dim::energy}, "MHz");
            j["mu_qubit1_mub"] = s.mu_qubit1;
            j["mu_qubit0_mub"] = s.mu_qubit0;
            j["qubit_m_i"] = s.qubit_m_i;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
        return exit_ok;
    }

    std::ostringstream csv;
    csv << "name,mass_u,nuclear_spin,electronic_j,hfs_splitting_mhz,mu_qubit1_mub,"
           "mu_qubit0_mub,qubit_m_i\n";
    for (const auto& name : cat.names()) {
        const AtomSpecies& s = cat.get(name);
        csv << s.name << ',' << format_value(s.mass_au / consts::amu_me) << ','
            << format_value(s.nuclear_spin) << ',' << format_value(s.electronic_j) << ','
            << format_value(units::value_in({s.hfs_splitting_au, units::Dim::energy}, "MHz"))
            << ',' << format_value(s.mu_qubit1) << ',' << format_value(s.mu_qubit0) << ','
            << format_value(s.qubit_m_i) << '\n';
    }
    if (!g.out_dir.empty())
        write_file(ensure_out_dir(g.out_dir) / "catalog.csv", csv.str());
    else
        std::cout << csv.str();
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    std::setlocale(LC_NUMERIC, "C");

    CLI::App app{"Feasibility calculator and exact simulator for magnetically "
                 "coupled atom chains in an optical lattice"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--config", g.config_path, "Design description (JSON)");
    app.add_option("--out", g.out_dir, "Directory for output files");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    auto* seed_opt = app.add_option("--seed", g.seed, "Override the config seed");

    auto* design = app.add_subcommand("design", "Derived figures of merit plus guards");
    design->fallthrough();

    auto* simulate = app.add_subcommand("simulate", "Compile a gate and grade it");
    simulate->fallthrough();
    std::string gate = "cnot";
    int site = 0;
    int control = 0;
    int target = 1;
    simulate->add_option("--gate", gate, "Gate to compile")
        ->check(CLI::IsMember({"not", "cnot"}));
    simulate->add_option("--site", site, "Site for --gate not");
    simulate->add_option("--control", control, "Control site for --gate cnot");
    simulate->add_option("--target", target, "Target site for --gate cnot");

    auto* sweep = app.add_subcommand("sweep", "Tabulate figures against one parameter");
    sweep->fallthrough();
    std::string param;
    std::string values;
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    sweep->add_option("--param", param, "wavelength, depth, gradient, mu, psd or xi")
        ->required();
    sweep->add_option("--values", values, "Comma-separated values");
    sweep->add_option("--from", from, "Range start");
    sweep->add_option("--to", to, "Range end");
    sweep->add_option("--points", points, "Number of linearly spaced points");

    auto* heating = app.add_subcommand("heating", "Motional excitation estimates");
    heating->fallthrough();

    auto* dephase = app.add_subcommand("dephase", "Field-noise dephasing estimates");
    dephase->fallthrough();
    std::string psd_text;
    std::string duration_text;
    long trials = 10000;
    dephase->add_option("--psd", psd_text, "White-noise level, e.g. \"1e-22 T^2/Hz\"")
        ->required();
    dephase->add_option("--duration", duration_text, "Override the exposure time");
    dephase->add_option("--trials", trials, "Monte-Carlo trials");

    auto* catalog = app.add_subcommand("catalog", "List the species table");
    catalog->fallthrough();
    std::string species_file;
    catalog->add_option("--species-file", species_file, "Alternative species table");

    CLI11_PARSE(app, argc, argv);
    g.seed_set = seed_opt->count() > 0;

    try {
        if (app.got_subcommand(design))
            return cmd_design(g);
        if (app.got_subcommand(simulate))
            return cmd_simulate(g, gate, site, control, target);
        if (app.got_subcommand(sweep))
            return cmd_sweep(g, param, values, from, to, points);
        if (app.got_subcommand(heating))
            return cmd_heating(g);
        if (app.got_subcommand(dephase))
            return cmd_dephase(g, psd_text, duration_text, trials);
        if (app.got_subcommand(catalog))
            return cmd_catalog(g, species_file);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const UnitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}
