#pragma once

#include "cslheat/species.hpp"

namespace cslheat {

/// Characteristic collapse excitation temperature hbar^2/(m a^2 k_B), in nK.
/// Throws std::domain_error for a_csl_m <= 0.
double t_csl_of(const species& sp, double a_csl_m);

/// Collapse-model parameters. t_csl and lambda*A^2 are always recomputed
/// from (lambda, a_csl) rather than stored.
struct csl_params {
    double lambda_per_s = 0.0;   // collapse rate per nucleon
    double a_csl_m = 1e-7;       // localization length

    void validate() const;
    double t_csl_nk(const species& sp) const { return t_csl_of(sp, a_csl_m); }
    double rate_a2(const species& sp) const;   // lambda * A^2, 1/s
};

} // namespace cslheat
