#pragma once

#include "mqc/config.hpp"

#include <string>
#include <vector>

namespace mqc {

// Process exit codes shared by the library guards and the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_force_bound = 3;
inline constexpr int exit_tunneling = 4;
inline constexpr int exit_perturbative = 5;
inline constexpr int exit_zero_coupling = 6;

struct ReportEntry {
    std::string id;
    double value = 0.0;
    std::string unit; // empty for dimensionless
};

struct Violation {
    int code = exit_failure;
    std::string message;
};

// Derived figures of merit for one design, plus any violated feasibility
// guards. A violated guard never aborts the run; every entry that can still
// be computed is reported.
struct FeasibilityReport {
    std::vector<ReportEntry> entries;
    std::vector<Violation> violations;

    bool has(const std::string& id) const;
    const ReportEntry& at(const std::string& id) const;
    int exit_code() const; // 0 when clean, else the smallest violation code

    std::string to_text() const;
    std::string to_json() const;
};

FeasibilityReport run_design(const ArchitectureConfig& c);

// %.12g with to_chars underneath: locale-independent and byte-stable.
std::string format_value(double v);

} // namespace mqc
