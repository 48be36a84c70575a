#include "cslheat/species.hpp"

#include <cmath>
#include <stdexcept>

#include "cslheat/constants.hpp"

namespace cslheat {

void species::validate() const {
    if (mass_number < 1)
        throw std::invalid_argument("species: mass number must be >= 1");
    if (mass_kg <= 0.0)
        throw std::invalid_argument("species: mass must be positive");
    const double nominal = mass_number * neutron_mass_kg;
    if (std::abs(mass_kg - nominal) > 0.01 * nominal)
        throw std::invalid_argument(
            "species '" + name + "': mass inconsistent with mass number");
}

species cesium_133(double a_s_bohr) {
    species sp;
    sp.name = "Cs-133";
    sp.mass_number = 133;
    sp.mass_kg = 132.905451961 * atomic_mass_kg;
    sp.scattering_length_m = a_s_bohr * bohr_radius_m;
    return sp;
}

species rubidium_87(double a_s_bohr) {
    species sp;
    sp.name = "Rb-87";
    sp.mass_number = 87;
    sp.mass_kg = 86.909180531 * atomic_mass_kg;
    sp.scattering_length_m = a_s_bohr * bohr_radius_m;
    return sp;
}

species species_by_name(const std::string& name) {
    if (name == "Cs-133" || name == "Cs" || name == "cesium")
        return cesium_133();
    if (name == "Rb-87" || name == "Rb" || name == "rubidium")
        return rubidium_87();
    throw std::invalid_argument("unknown species preset: " + name);
}

} // namespace cslheat
