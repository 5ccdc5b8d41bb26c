#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mqc::units {

enum class Dim {
    dimensionless,
    energy,
    frequency,
    length,
    magnetic_field,
    time,
    mass,
    intensity,
    field_gradient,
    noise_psd,
    noise_asd,
};

const char* dim_name(Dim d);

// Value in atomic units plus its dimension. Temperatures count as energies
// (via k_B); frequencies convert to energies through hbar = 1, which is the
// single sanctioned cross-dimension bridge.
struct Quantity {
    double au = 0.0;
    Dim dim = Dim::dimensionless;
};

Dim unit_dim(std::string_view unit);
bool known_unit(std::string_view unit);
std::vector<std::string> unit_names();

bool convertible(Dim from, Dim to);

Quantity make(double value, std::string_view unit);
double value_in(const Quantity& q, std::string_view unit);
Quantity convert(const Quantity& q, std::string_view unit);

// Parses "0.4 mK", "250nm", "7" (dimensionless). Throws ConfigError on junk,
// UnitError on unknown units.
Quantity parse(std::string_view text);
Quantity parse_as(std::string_view text, Dim want);

} // namespace mqc::units
