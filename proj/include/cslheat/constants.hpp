#pragma once

// Unit conventions used throughout: time in seconds, lengths in metres,
// energies quoted as temperatures E/k_B in nanokelvin, rates in 1/s.
// Linear frequencies (Hz) carry an _hz suffix, angular ones (rad/s) _rad_s.

namespace cslheat {

// CODATA 2018
inline constexpr double hbar_js         = 1.054571817e-34;   // J s
inline constexpr double k_boltzmann_jk  = 1.380649e-23;      // J/K
inline constexpr double atomic_mass_kg  = 1.66053906660e-27; // kg
inline constexpr double bohr_radius_m   = 5.29177210903e-11; // m
inline constexpr double neutron_mass_kg = 1.67492749804e-27; // kg

inline constexpr double joule_per_nk = k_boltzmann_jk * 1e-9;

inline double nk_from_joule(double e_j) { return e_j / joule_per_nk; }
inline double joule_from_nk(double e_nk) { return e_nk * joule_per_nk; }

} // namespace cslheat
