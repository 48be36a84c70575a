#pragma once

#include <vector>

#include "cslheat/energy_dist.hpp"

namespace cslheat {

/// Energy-space scattering kernel (per 1/sqrt(nK)):
///   K(eps, eps') = [exp(-2(sqrt eps - sqrt eps')^2 / t_csl)
///               -   exp(-2(sqrt eps + sqrt eps')^2 / t_csl)]
///                / sqrt(pi t_csl / 2)
/// The rate equation integrates K against d sqrt(eps'), so the
/// number-conserving column statement is  int K(eps,eps') d eps = 2 sqrt(eps').
double energy_kernel(double eps_nk, double eps_p_nk, double t_csl_nk);

/// int_0^inf K(eps, eps') d eps / (2 sqrt(eps')) by adaptive quadrature;
/// equals 1 for every eps' > 0.
double energy_kernel_column_integral(double eps_p_nk, double t_csl_nk,
                                     double abs_tol = 1e-10);

/// Poisson-sum analytic solution of the rate equation on the stored grid.
/// Truncates when the next Poisson weight e^{-r t}(r t)^s/s! drops below
/// tol; throws std::invalid_argument if tol is below double precision reach
/// or the s = 200 cap is hit first.
energy_distribution evolve_series(const energy_distribution& dist0,
                                  double rate_a2, double t_csl_nk, double t_s,
                                  double tol = 1e-12);

/// Direct adaptive time integration of the integro-differential rate
/// equation on the stored grid; cross-check for evolve_series.
energy_distribution evolve_ode(const energy_distribution& dist0,
                               double rate_a2, double t_csl_nk, double t_s);

/// Spectrum scattered out of an initial N-atom condensate treated as a
/// delta at eps1 = alpha'^2 t_csl / 2 (analytic path; the surviving
/// delta weight N e^{-rate t} is not included in the returned curve).
double bec_delta_spectrum(double eps_nk, double t_s, double n0,
                          double alpha_prime, double t_csl_nk, double rate_a2,
                          double tol = 1e-12);

/// Evaluate bec_delta_spectrum on a grid.
energy_distribution evolve_bec_delta(double n0, double rate_a2,
                                     double alpha_prime, double t_csl_nk,
                                     double t_s, std::vector<double> grid_nk,
                                     double tol = 1e-12);

} // namespace cslheat
