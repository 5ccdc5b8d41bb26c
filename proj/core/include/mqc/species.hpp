#pragma once

#include <map>
#include <string>
#include <vector>

namespace mqc {

// One qubit candidate: an atom with electronic angular momentum J, nuclear
// spin I, and a qubit encoded in the high-field stretched Zeeman pair
// (M_J = +J, M_I) / (M_J = -J, M_I). Magnetic moments are stored as energy
// slopes dE/dB of the two qubit levels in the strong-field limit, in units
// of the Bohr magneton (the physical moment is the negative of the slope).
struct AtomSpecies {
    std::string name;
    double mass_au = 0.0;        // electron masses
    double nuclear_spin = 0.0;   // I
    double electronic_j = 0.5;   // J
    double hfs_splitting_au = 0.0; // zero-field hyperfine splitting (energy a.u.)
    double mu_qubit1 = 1.0;      // dE/dB of |1>, Bohr magnetons
    double mu_qubit0 = -1.0;     // dE/dB of |0>, Bohr magnetons
    double nuclear_g_factor = 0.0;
    double qubit_m_i = 0.0;      // M_I shared by the qubit pair; stretched +I by default

    double lande_g() const { return (mu_qubit1 - mu_qubit0) / (2.0 * electronic_j); }
    double hyperfine_a_au() const; // interval constant A = splitting / (I + J)
    int levels() const;

    void validate() const;
};

class SpeciesCatalog {
public:
    static SpeciesCatalog builtin();
    static SpeciesCatalog from_file(const std::string& path);
    static SpeciesCatalog from_json_text(const std::string& text, const std::string& origin);

    const AtomSpecies& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;
    size_t size() const { return entries_.size(); }

private:
    std::map<std::string, AtomSpecies> entries_;
};

// Embedded copy of the default catalog file.
const char* builtin_species_json();

} // namespace mqc
