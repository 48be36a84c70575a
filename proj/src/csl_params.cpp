#include "cslheat/csl_params.hpp"

#include <stdexcept>

#include "cslheat/constants.hpp"

namespace cslheat {

double t_csl_of(const species& sp, double a_csl_m) {
    if (a_csl_m <= 0.0)
        throw std::domain_error("t_csl_of: localization length must be > 0");
    const double e_j = hbar_js * hbar_js / (sp.mass_kg * a_csl_m * a_csl_m);
    return nk_from_joule(e_j);
}

void csl_params::validate() const {
    if (lambda_per_s < 0.0)
        throw std::invalid_argument("csl_params: lambda must be >= 0");
    if (a_csl_m <= 0.0)
        throw std::invalid_argument("csl_params: a must be > 0");
}

double csl_params::rate_a2(const species& sp) const {
    return lambda_per_s * static_cast<double>(sp.mass_number) *
           static_cast<double>(sp.mass_number);
}

} // namespace cslheat
