#pragma once

#include <string>
#include <vector>

namespace cslheat {

/// Occupation per unit energy <N_eps> sampled on an ascending energy grid.
/// n_total is the trapezoidal integral at construction time.
struct energy_distribution {
    std::vector<double> grid_nk;    // ascending, >= 0
    std::vector<double> values;     // occupation per nK
    double n_total = 0;
    double time_s = 0;

    double number() const;          // trapezoidal integral of values
    double energy_total_nk() const; // trapezoidal first moment
    void validate(double n_rel_tol = 1e-3) const;
    void write_csv(const std::string& path) const;  // eps_nK,N_per_nK
};

/// Hybrid grid: geometric in energy from 1e-3 * t_csl near the origin,
/// then uniform in sqrt(energy) with spacing sqrt(t_csl/2)/points_per_width
/// up to z_max = sqrt(eps_max). The kernel has width ~sqrt(t_csl/2) in
/// sqrt-energy space, so this resolves it uniformly.
std::vector<double> make_energy_grid(double t_csl_nk, double eps_max_nk,
                                     int points_per_width = 60);

/// eps_max large enough that both the initial support and the
/// Poisson-smeared kernel tails (lambda A^2 t up to rate_a2_t_max kicks)
/// carry mass below ~1e-8 of the total.
double suggest_eps_max_nk(double t_csl_nk, double rate_a2_t_max,
                          double eps_init_max_nk);

/// Ideal Bose cloud at temperature T in a harmonic trap with level spacing
/// hbar_omega_nk, holding n atoms (fugacity solved from n; requires
/// T >= T_c so no condensate). n_total is set to the grid quadrature of the
/// sampled curve.
energy_distribution thermal_cloud_distribution(double n, double temperature_nk,
                                               double hbar_omega_nk,
                                               std::vector<double> grid_nk);

} // namespace cslheat
