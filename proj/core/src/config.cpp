#include "mqc/config.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"
#include "mqc/units.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace mqc {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::string& where,
                    std::initializer_list<const char*> known)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

double quantity_au(const json& j, const std::string& where, units::Dim dim)
{
    if (!j.is_string())
        throw ConfigError(where + ": expected a unit-annotated string like \"0.4 mK\"");
    return units::parse_as(j.get<std::string>(), dim).au;
}

double number_at(const json& j, const std::string& where)
{
    if (!j.is_number())
        throw ConfigError(where + ": expected a plain number");
    return j.get<double>();
}

void apply_species_override(AtomSpecies& s, const json& j, const std::string& where)
{
    if (!j.is_object())
        throw ConfigError(where + ": expected an object");
    reject_unknown(j, where,
                   {"mass", "nuclear_spin", "electronic_j", "hfs_splitting", "mu_qubit1",
                    "mu_qubit0", "nuclear_g_factor", "qubit_m_i"});
    if (j.contains("mass"))
        s.mass_au = quantity_au(j["mass"], where + ".mass", units::Dim::mass);
    if (j.contains("nuclear_spin"))
        s.nuclear_spin = number_at(j["nuclear_spin"], where + ".nuclear_spin");
    if (j.contains("electronic_j"))
        s.electronic_j = number_at(j["electronic_j"], where + ".electronic_j");
    if (j.contains("hfs_splitting"))
        s.hfs_splitting_au =
            quantity_au(j["hfs_splitting"], where + ".hfs_splitting", units::Dim::energy);
    if (j.contains("mu_qubit1"))
        s.mu_qubit1 = number_at(j["mu_qubit1"], where + ".mu_qubit1");
    if (j.contains("mu_qubit0"))
        s.mu_qubit0 = number_at(j["mu_qubit0"], where + ".mu_qubit0");
    if (j.contains("nuclear_g_factor"))
        s.nuclear_g_factor = number_at(j["nuclear_g_factor"], where + ".nuclear_g_factor");
    if (j.contains("qubit_m_i"))
        s.qubit_m_i = number_at(j["qubit_m_i"], where + ".qubit_m_i");
}

} // namespace

ArchitectureConfig ArchitectureConfig::from_json_text(const std::string& text,
                                                      const std::string& base_dir)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");

    reject_unknown(j, "config",
                   {"species", "species_file", "species_override", "qubit_m_i", "lattice",
                    "field", "chain_length", "pulse_model", "rabi", "step_scale", "targets",
                    "seed"});

    ArchitectureConfig c;

    if (!j.contains("species") || !j["species"].is_string())
        throw ConfigError("config: 'species' (string) is required");
    c.species_name = j["species"].get<std::string>();

    SpeciesCatalog catalog;
    if (j.contains("species_file")) {
        if (!j["species_file"].is_string())
            throw ConfigError("config.species_file: expected a path string");
        std::filesystem::path p = j["species_file"].get<std::string>();
        if (p.is_relative() && !base_dir.empty())
            p = std::filesystem::path(base_dir) / p;
        catalog = SpeciesCatalog::from_file(p.string());
    } else {
        catalog = SpeciesCatalog::builtin();
    }
    c.species = catalog.get(c.species_name);

    if (j.contains("species_override"))
        apply_species_override(c.species, j["species_override"], "config.species_override");
    if (j.contains("qubit_m_i"))
        c.species.qubit_m_i = number_at(j["qubit_m_i"], "config.qubit_m_i");
    c.species.validate();

    if (!j.contains("lattice") || !j["lattice"].is_object())
        throw ConfigError("config: 'lattice' (object) is required");
    const json& lat = j["lattice"];
    reject_unknown(lat, "config.lattice", {"wavelength", "depth", "intensity", "polarizability"});
    if (!lat.contains("wavelength"))
        throw ConfigError("config.lattice: 'wavelength' is required");
    c.wavelength_au = quantity_au(lat["wavelength"], "config.lattice.wavelength",
                                  units::Dim::length);
    if (!(c.wavelength_au > 0.0))
        throw ConfigError("config.lattice.wavelength: must be positive");
    if (lat.contains("depth")) {
        c.depth_given = true;
        c.depth_au = quantity_au(lat["depth"], "config.lattice.depth", units::Dim::energy);
        if (!(c.depth_au > 0.0))
            throw ConfigError("config.lattice.depth: must be positive");
    }
    if (lat.contains("intensity") != lat.contains("polarizability"))
        throw ConfigError("config.lattice: 'intensity' and 'polarizability' come as a pair");
    if (lat.contains("intensity")) {
        if (c.depth_given)
            throw ConfigError("config.lattice: give either 'depth' or 'intensity', not both");
        c.intensity_given = true;
        c.intensity_au =
            quantity_au(lat["intensity"], "config.lattice.intensity", units::Dim::intensity);
        c.polarizability_au =
            number_at(lat["polarizability"], "config.lattice.polarizability");
        if (!(c.intensity_au > 0.0) || !(c.polarizability_au > 0.0))
            throw ConfigError("config.lattice: intensity and polarizability must be positive");
    }

    if (j.contains("field")) {
        const json& f = j["field"];
        if (!f.is_object())
            throw ConfigError("config.field: expected an object");
        reject_unknown(f, "config.field", {"bias", "gradient"});
        if (f.contains("bias"))
            c.bias_au = quantity_au(f["bias"], "config.field.bias", units::Dim::magnetic_field);
        if (f.contains("gradient"))
            c.gradient_au =
                quantity_au(f["gradient"], "config.field.gradient", units::Dim::field_gradient);
    }

    if (j.contains("chain_length")) {
        if (!j["chain_length"].is_number_integer())
            throw ConfigError("config.chain_length: expected an integer");
        c.chain_length = j["chain_length"].get<int>();
        if (c.chain_length < 1)
            throw ConfigError("config.chain_length: must be at least 1");
    }

    if (j.contains("pulse_model")) {
        if (!j["pulse_model"].is_string())
            throw ConfigError("config.pulse_model: expected \"ideal\" or \"finite\"");
        const std::string m = j["pulse_model"].get<std::string>();
        if (m == "ideal")
            c.pulse_model = PulseModel::ideal;
        else if (m == "finite")
            c.pulse_model = PulseModel::finite;
        else
            throw ConfigError("config.pulse_model: expected \"ideal\" or \"finite\", got '"
                              + m + "'");
    }

    if (j.contains("rabi")) {
        c.rabi_rad_s = quantity_au(j["rabi"], "config.rabi", units::Dim::frequency)
                       / consts::atomic_time_s;
        if (!(c.rabi_rad_s > 0.0))
            throw ConfigError("config.rabi: must be positive");
    }

    if (j.contains("step_scale")) {
        c.step_scale = number_at(j["step_scale"], "config.step_scale");
        if (!(c.step_scale > 0.0))
            throw ConfigError("config.step_scale: must be positive");
    }

    if (j.contains("targets")) {
        const json& t = j["targets"];
        if (!t.is_object())
            throw ConfigError("config.targets: expected an object");
        reject_unknown(t, "config.targets",
                       {"not_time", "tunneling_time", "error_budget", "decoherence_time"});
        if (t.contains("not_time")) {
            c.target_not_time_s =
                quantity_au(t["not_time"], "config.targets.not_time", units::Dim::time)
                * consts::atomic_time_s;
            if (!(c.target_not_time_s > 0.0))
                throw ConfigError("config.targets.not_time: must be positive");
        }
        if (t.contains("tunneling_time")) {
            c.tunneling_target_given = true;
            c.target_tunneling_time_s =
                quantity_au(t["tunneling_time"], "config.targets.tunneling_time",
                            units::Dim::time)
                * consts::atomic_time_s;
            if (!(c.target_tunneling_time_s > 0.0))
                throw ConfigError("config.targets.tunneling_time: must be positive");
        }
        if (t.contains("error_budget")) {
            c.error_budget = number_at(t["error_budget"], "config.targets.error_budget");
            if (!(c.error_budget > 0.0 && c.error_budget < 1.0))
                throw ConfigError("config.targets.error_budget: must lie in (0, 1)");
        }
        if (t.contains("decoherence_time")) {
            c.decoherence_time_s =
                quantity_au(t["decoherence_time"], "config.targets.decoherence_time",
                            units::Dim::time)
                * consts::atomic_time_s;
            if (!(c.decoherence_time_s > 0.0))
                throw ConfigError("config.targets.decoherence_time: must be positive");
        }
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw ConfigError("config.seed: expected a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }

    return c;
}

ArchitectureConfig ArchitectureConfig::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), std::filesystem::path(path).parent_path().string());
}

LatticeConfig resolved_lattice(const ArchitectureConfig& c)
{
    if (c.depth_given)
        return make_lattice(c.wavelength_au, c.depth_au);
    if (c.intensity_given)
        return make_lattice(c.wavelength_au,
                            depth_from_intensity(c.polarizability_au, c.intensity_au));
    if (c.tunneling_target_given) {
        double depth = depth_for_tunneling_time_au(c.species, c.wavelength_au,
                                                   c.target_tunneling_time_s);
        return make_lattice(c.wavelength_au, depth);
    }
    throw ConfigError("config.lattice: need 'depth', 'intensity' + 'polarizability', or "
                      "targets.tunneling_time to fix the depth");
}

FieldProfile field_profile(const ArchitectureConfig& c)
{
    return {c.bias_au, c.gradient_au};
}

SpinChainModel chain_model(const ArchitectureConfig& c)
{
    return build_chain(c.species, resolved_lattice(c), field_profile(c), c.chain_length);
}

} // namespace mqc
