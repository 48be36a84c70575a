#pragma once

#include <string>

namespace cslheat {

/// Atomic species constants. Immutable value type.
struct species {
    std::string name;
    int mass_number = 0;            // nucleon count A
    double mass_kg = 0.0;
    double scattering_length_m = 0.0;  // s-wave scattering length a_s

    /// Throws std::invalid_argument when A < 1, mass <= 0, or the mass is
    /// not within 1% of A nucleon masses.
    void validate() const;
};

/// Cs-133 preset; scattering length configurable in Bohr radii (232 or 250
/// for the optical traps analysed here).
species cesium_133(double a_s_bohr = 232.0);

/// Rb-87 preset.
species rubidium_87(double a_s_bohr = 98.98);

/// Resolve "Cs-133" / "Rb-87" preset names.
species species_by_name(const std::string& name);

} // namespace cslheat
