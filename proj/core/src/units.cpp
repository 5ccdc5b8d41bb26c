#include "mqc/units.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>

namespace mqc::units {

namespace {

using namespace mqc::consts;

constexpr double two_pi = 2.0 * std::numbers::pi;

struct UnitDef {
    Dim dim;
    double to_au;
};

const std::map<std::string, UnitDef, std::less<>>& registry()
{
    static const std::map<std::string, UnitDef, std::less<>> table = {
        {"", {Dim::dimensionless, 1.0}},

        {"hartree", {Dim::energy, 1.0}},
        {"J", {Dim::energy, 1.0 / hartree_j}},
        {"K", {Dim::energy, 1.0 / hartree_k}},
        {"mK", {Dim::energy, 1e-3 / hartree_k}},
        {"uK", {Dim::energy, 1e-6 / hartree_k}},
        {"nK", {Dim::energy, 1e-9 / hartree_k}},

        // Ordinary (cycle) frequencies; 1 Hz corresponds to an angular
        // frequency of 2*pi rad/s, i.e. an energy of 2*pi*t_au hartree.
        {"Hz", {Dim::frequency, two_pi * atomic_time_s}},
        {"kHz", {Dim::frequency, 1e3 * two_pi * atomic_time_s}},
        {"MHz", {Dim::frequency, 1e6 * two_pi * atomic_time_s}},
        {"GHz", {Dim::frequency, 1e9 * two_pi * atomic_time_s}},
        {"THz", {Dim::frequency, 1e12 * two_pi * atomic_time_s}},
        {"rad/s", {Dim::frequency, atomic_time_s}},

        {"bohr", {Dim::length, 1.0}},
        {"m", {Dim::length, 1.0 / bohr_m}},
        {"cm", {Dim::length, 1e-2 / bohr_m}},
        {"mm", {Dim::length, 1e-3 / bohr_m}},
        {"um", {Dim::length, 1e-6 / bohr_m}},
        {"nm", {Dim::length, 1e-9 / bohr_m}},

        {"T", {Dim::magnetic_field, 1.0 / field_au_t}},
        {"mT", {Dim::magnetic_field, 1e-3 / field_au_t}},
        {"uT", {Dim::magnetic_field, 1e-6 / field_au_t}},
        {"G", {Dim::magnetic_field, 1e-4 / field_au_t}},
        {"mG", {Dim::magnetic_field, 1e-7 / field_au_t}},

        {"s", {Dim::time, 1.0 / atomic_time_s}},
        {"ms", {Dim::time, 1e-3 / atomic_time_s}},
        {"us", {Dim::time, 1e-6 / atomic_time_s}},
        {"ns", {Dim::time, 1e-9 / atomic_time_s}},

        {"m_e", {Dim::mass, 1.0}},
        {"u", {Dim::mass, amu_me}},
        {"kg", {Dim::mass, 1.0 / electron_mass_kg}},

        {"W/m^2", {Dim::intensity, 1.0 / intensity_au_w_m2}},
        {"kW/m^2", {Dim::intensity, 1e3 / intensity_au_w_m2}},
        {"W/cm^2", {Dim::intensity, 1e4 / intensity_au_w_m2}},
        {"kW/cm^2", {Dim::intensity, 1e7 / intensity_au_w_m2}},

        {"T/m", {Dim::field_gradient, 1.0 / gradient_au_t_m}},
        {"G/cm", {Dim::field_gradient, 1e-2 / gradient_au_t_m}},

        {"T^2/Hz", {Dim::noise_psd, 1.0 / psd_au_t2_hz}},
        {"G^2/Hz", {Dim::noise_psd, 1e-8 / psd_au_t2_hz}},

        {"T/sqrtHz", {Dim::noise_asd, 1.0 / std::sqrt(psd_au_t2_hz)}},
        {"G/sqrtHz", {Dim::noise_asd, 1e-4 / std::sqrt(psd_au_t2_hz)}},
    };
    return table;
}

const UnitDef& lookup(std::string_view unit)
{
    const auto& table = registry();
    auto it = table.find(unit);
    if (it == table.end())
        throw UnitError("unknown unit '" + std::string(unit) + "'");
    return it->second;
}

} // namespace

const char* dim_name(Dim d)
{
    switch (d) {
    case Dim::dimensionless: return "dimensionless";
    case Dim::energy: return "energy";
    case Dim::frequency: return "frequency";
    case Dim::length: return "length";
    case Dim::magnetic_field: return "magnetic_field";
    case Dim::time: return "time";
    case Dim::mass: return "mass";
    case Dim::intensity: return "intensity";
    case Dim::field_gradient: return "field_gradient";
    case Dim::noise_psd: return "noise_psd";
    case Dim::noise_asd: return "noise_asd";
    }
    return "?";
}

Dim unit_dim(std::string_view unit) { return lookup(unit).dim; }

bool known_unit(std::string_view unit)
{
    return registry().count(unit) != 0;
}

std::vector<std::string> unit_names()
{
    std::vector<std::string> names;
    for (const auto& [name, def] : registry())
        names.push_back(name);
    return names;
}

bool convertible(Dim from, Dim to)
{
    if (from == to)
        return true;
    // hbar = 1: energies and angular frequencies share atomic-unit values.
    return (from == Dim::energy && to == Dim::frequency)
        || (from == Dim::frequency && to == Dim::energy);
}

Quantity make(double value, std::string_view unit)
{
    const auto& def = lookup(unit);
    return {value * def.to_au, def.dim};
}

double value_in(const Quantity& q, std::string_view unit)
{
    const auto& def = lookup(unit);
    if (!convertible(q.dim, def.dim))
        throw UnitError(std::string("cannot express ") + dim_name(q.dim) + " in '"
                        + std::string(unit) + "' (" + dim_name(def.dim) + ")");
    return q.au / def.to_au;
}

Quantity convert(const Quantity& q, std::string_view unit)
{
    const auto& def = lookup(unit);
    if (!convertible(q.dim, def.dim))
        throw UnitError(std::string("cannot convert ") + dim_name(q.dim) + " to '"
                        + std::string(unit) + "' (" + dim_name(def.dim) + ")");
    return {q.au, def.dim};
}

Quantity parse(std::string_view text)
{
    size_t b = 0;
    size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    if (b == e)
        throw ConfigError("empty quantity string");

    double value = 0.0;
    const char* first = text.data() + b;
    const char* last = text.data() + e;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first)
        throw ConfigError("cannot parse number in '" + std::string(text) + "'");

    std::string_view unit(ptr, static_cast<size_t>(last - ptr));
    while (!unit.empty() && std::isspace(static_cast<unsigned char>(unit.front())))
        unit.remove_prefix(1);
    return make(value, unit);
}

Quantity parse_as(std::string_view text, Dim want)
{
    Quantity q = parse(text);
    if (!convertible(q.dim, want))
        throw UnitError("expected " + std::string(dim_name(want)) + ", got "
                        + dim_name(q.dim) + " in '" + std::string(text) + "'");
    q.dim = want;
    return q;
}

} // namespace mqc::units
