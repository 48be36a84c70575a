#pragma once

#include "cslheat/trap.hpp"
#include "cslheat/csl_params.hpp"

namespace cslheat {

/// Finite-temperature Hartree-Fock state of a trapped Bose gas below T_c.
/// All energies are temperatures in nK; eta is the dimensionless interaction
/// parameter (hbar wbar / 2 k_B T_c)(15 N a_s / a_HO)^{2/5}.
struct thermo_state {
    double n_atoms = 0;
    double temperature_nk = 0;
    trap_geometry trap;
    species sp;

    // derived
    double t_c_nk = 0;
    double s = 0;            // T / T_c
    double eta = 0;
    double mu_nk = 0;
    double f = 0;            // condensate fraction
    double u_per_n_nk = 0;   // U / (N k_B)
};

/// Partial derivatives of the Hartree-Fock thermodynamics.
struct thermo_derivatives {
    double c_kb = 0;        // specific heat per atom, units of k_B
    double mu_n_nk = 0;     // (dU/dN)_T per k_B
    double f_t_per_nk = 0;  // (df/dT)_N
    double f_n = 0;         // N (df/dN)_T
};

double t_c_ideal_nk(double n, const trap_geometry& trap);

struct ideal_fraction_result {
    double n_cloud;
    double n_bec;
    double f;
};
ideal_fraction_result ideal_fractions(double n, double temperature_nk,
                                      const trap_geometry& trap);

struct ideal_energy_result {
    double u_total_nk;   // N * u_per_atom, nK (times count)
    double c_kb;         // specific heat per atom / k_B
};
ideal_energy_result ideal_energy_and_heat(double n, double temperature_nk,
                                          const trap_geometry& trap);

/// Collapse rate a condensate-fraction lifetime would imply if collapse
/// heating were the only energy source (ideal-gas thermodynamics).
double lambda_ideal_only_csl(double temperature_nk, double t_c_nk,
                             double tau_f_s, const csl_params& csl,
                             const species& sp);

/// Hartree-Fock state at (N, T). Requires 0 < T < T_c and a condensate
/// fraction still in (0,1]; throws std::domain_error outside validity.
thermo_state hf_state(double n, double temperature_nk,
                      const trap_geometry& trap, const species& sp);

thermo_derivatives hf_derivatives(const thermo_state& state);

/// Invert the condensate-fraction relation for T: bracketed bisection on
/// s in (0,1) to 1e-6 in s. Throws std::domain_error if no root exists.
double temperature_from_fraction(double f_target, double n,
                                 const trap_geometry& trap, const species& sp);

/// Interaction constant g = 4 pi hbar^2 a_s / m, in J m^3.
double interaction_g(const species& sp);

/// Thomas-Fermi condensate density (1/m^3) in the isotropic-equivalent trap.
double density_condensate(double r_m, const thermo_state& state);

/// Thomas-Fermi radius of the condensate, m.
double thomas_fermi_radius_m(const thermo_state& state);

struct thermal_density_result {
    double value_per_m3;
    bool clamped;   // fugacity argument exceeded 1 and was clamped
};
/// Hartree-Fock thermal-cloud density (1/m^3). The plain overload clamps
/// silently; the _ex form reports the clamp.
thermal_density_result density_thermal_ex(double r_m, const thermo_state& state);
double density_thermal(double r_m, const thermo_state& state);

} // namespace cslheat
