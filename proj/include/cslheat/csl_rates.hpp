#pragma once

#include "cslheat/csl_params.hpp"
#include "cslheat/species.hpp"

namespace cslheat {

/// Survival N(t) = n0 exp(-rate_a2 [1 - (4 pi)^{3/2} correction] t) of a
/// swept condensate. `correction` is C (a/sigma)^3; the default 0 gives the
/// bare lifetime 1/rate_a2.
double bec_survival(double n0, double rate_a2, double t_s,
                    double correction = 0.0);

/// Shape constants C entering the survival correction.
double c_box();                      // (3/2)^3
double c_harmonic();                 // (2 pi)^{-3/2}
/// sigma^3 int phi0^4 for the printed Thomas-Fermi profile, evaluated
/// directly: (32 pi/105)(15/8 pi)^{7/5} = 0.46484...
double c_thomas_fermi_computed();
/// Value printed in the source analysis (~3.7x the direct evaluation of the
/// same profile; kept available for comparison, not used as default).
double c_thomas_fermi_paper();

/// Total ensemble energy growth dE/dt = rate_a2 * N * (3/4) * t_csl, nK/s.
double energy_growth_rate(double n, const csl_params& csl, const species& sp);

/// lambda bound from a bare measured lifetime: 1 / (tau_exp A^2).
double lambda_limit_simple(double tau_exp_s, const species& sp);

} // namespace cslheat
