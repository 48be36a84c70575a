#pragma once

namespace cslheat {

struct zeta_values {
    double zeta2;
    double zeta3;
    double zeta4;
};

/// zeta(2) = pi^2/6, zeta(3) = 1.2020569..., zeta(4) = pi^4/90.
zeta_values zeta_constants();

/// Bose function g_{3/2}(z) = sum_k z^k / k^{3/2} for 0 <= z <= 1.
/// Direct series below z = 0.5, Robinson expansion above (the direct series
/// needs ~1/(1-z) terms near 1). g32(1) = zeta(3/2) = 2.612...
double g32(double z);

/// g_3(z) = sum_k z^k / k^3, used to set the fugacity of an ideal cloud.
double g3(double z);

} // namespace cslheat
