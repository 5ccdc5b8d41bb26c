#pragma once

#include "mqc/chain.hpp"
#include "mqc/lattice.hpp"
#include "mqc/schedule.hpp"
#include "mqc/species.hpp"

#include <cstdint>
#include <string>

namespace mqc {

// A full design request, parsed from a strict JSON document. Every physical
// value arrives as a "number unit" string ("0.4 mK", "20 G/cm"); unknown keys
// are rejected at every nesting level so typos fail loudly instead of
// silently falling back to defaults.
struct ArchitectureConfig {
    AtomSpecies species;
    std::string species_name;

    double wavelength_au = 0.0;
    bool depth_given = false;
    double depth_au = 0.0;
    bool intensity_given = false;
    double intensity_au = 0.0;
    double polarizability_au = 0.0;

    double bias_au = 0.0;
    double gradient_au = 0.0;
    int chain_length = 2;

    PulseModel pulse_model = PulseModel::ideal;
    double rabi_rad_s = 0.0;   // drive ceiling for compiled pulses; 0 = auto
    double step_scale = 50.0;

    double target_not_time_s = 1.0e-3;
    bool tunneling_target_given = false;
    double target_tunneling_time_s = 0.0;
    double error_budget = 0.01;
    double decoherence_time_s = 60.0;

    std::uint64_t seed = 1;

    // base_dir resolves a relative species_file; empty means the working
    // directory.
    static ArchitectureConfig from_json_text(const std::string& text,
                                             const std::string& base_dir = "");
    static ArchitectureConfig from_file(const std::string& path);
};

// Depth precedence: explicit depth, else intensity times polarizability,
// else the smallest depth meeting the tunneling-time target. With none of
// the three available this throws ConfigError.
LatticeConfig resolved_lattice(const ArchitectureConfig& c);

FieldProfile field_profile(const ArchitectureConfig& c);

// build_chain at the resolved lattice and configured field.
SpinChainModel chain_model(const ArchitectureConfig& c);

} // namespace mqc
