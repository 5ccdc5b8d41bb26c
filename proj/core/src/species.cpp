#include "mqc/species.hpp"

#include "mqc/error.hpp"
#include "mqc/units.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace mqc {

namespace {

using nlohmann::json;

bool half_integral(double x)
{
    return std::abs(2.0 * x - std::round(2.0 * x)) < 1e-9;
}

bool integral(double x)
{
    return std::abs(x - std::round(x)) < 1e-9;
}

AtomSpecies parse_species(const json& j, const std::string& origin)
{
    static const char* known[] = {"name", "mass", "nuclear_spin", "electronic_j",
                                  "hfs_splitting", "mu_qubit1", "mu_qubit0",
                                  "nuclear_g_factor", "qubit_m_i"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw ConfigError(origin + ": unknown species field '" + it.key() + "'");
    }

    AtomSpecies s;
    try {
        s.name = j.at("name").get<std::string>();
        s.mass_au = units::parse_as(j.at("mass").get<std::string>(), units::Dim::mass).au;
        s.nuclear_spin = j.at("nuclear_spin").get<double>();
        s.electronic_j = j.at("electronic_j").get<double>();
        s.hfs_splitting_au =
            units::parse_as(j.at("hfs_splitting").get<std::string>(), units::Dim::energy).au;
        s.mu_qubit1 = j.at("mu_qubit1").get<double>();
        s.mu_qubit0 = j.at("mu_qubit0").get<double>();
        s.nuclear_g_factor = j.value("nuclear_g_factor", 0.0);
        s.qubit_m_i = j.value("qubit_m_i", s.nuclear_spin);
    } catch (const json::exception& e) {
        throw ConfigError(origin + ": bad species entry: " + e.what());
    }
    s.validate();
    return s;
}

} // namespace

double AtomSpecies::hyperfine_a_au() const
{
    if (nuclear_spin <= 0.0)
        return 0.0;
    return hfs_splitting_au / (nuclear_spin + electronic_j);
}

int AtomSpecies::levels() const
{
    return static_cast<int>((2.0 * electronic_j + 1.0) * (2.0 * nuclear_spin + 1.0) + 0.5);
}

void AtomSpecies::validate() const
{
    if (name.empty())
        throw ConfigError("species without a name");
    if (!(mass_au > 0.0))
        throw ConfigError(name + ": mass must be positive");
    if (nuclear_spin < 0.0 || !half_integral(nuclear_spin))
        throw ConfigError(name + ": nuclear spin must be a non-negative half-integer");
    if (electronic_j < 0.5 || !half_integral(electronic_j))
        throw ConfigError(name + ": electronic J must be a half-integer >= 1/2");
    if (nuclear_spin > 0.0 && !(hfs_splitting_au > 0.0))
        throw ConfigError(name + ": hyperfine splitting must be positive when I > 0");
    if (nuclear_spin == 0.0 && hfs_splitting_au != 0.0)
        throw ConfigError(name + ": I = 0 species cannot have a hyperfine splitting");
    if (std::abs(qubit_m_i) > nuclear_spin + 1e-9 || !integral(qubit_m_i - nuclear_spin))
        throw ConfigError(name + ": qubit M_I must belong to the nuclear Zeeman ladder");
}

SpeciesCatalog SpeciesCatalog::builtin()
{
    return from_json_text(builtin_species_json(), "builtin catalog");
}

SpeciesCatalog SpeciesCatalog::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open species catalog '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), path);
}

SpeciesCatalog SpeciesCatalog::from_json_text(const std::string& text, const std::string& origin)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("species") || !j["species"].is_array())
        throw ConfigError(origin + ": expected an object with a 'species' array");

    SpeciesCatalog cat;
    for (const auto& entry : j["species"]) {
        AtomSpecies s = parse_species(entry, origin);
        if (!cat.entries_.emplace(s.name, s).second)
            throw ConfigError(origin + ": duplicate species '" + s.name + "'");
    }
    if (cat.entries_.empty())
        throw ConfigError(origin + ": catalog is empty");
    return cat;
}

const AtomSpecies& SpeciesCatalog::get(const std::string& name) const
{
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        std::string msg = "unknown species '" + name + "'; available:";
        for (const auto& [k, v] : entries_)
            msg += " " + k;
        throw ConfigError(msg);
    }
    return it->second;
}

bool SpeciesCatalog::contains(const std::string& name) const
{
    return entries_.count(name) != 0;
}

std::vector<std::string> SpeciesCatalog::names() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        out.push_back(k);
    return out;
}

} // namespace mqc
