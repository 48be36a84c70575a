#include "cslheat/bose_func.hpp"

#include <cmath>
#include <stdexcept>

namespace cslheat {

zeta_values zeta_constants() {
    const double pi = 3.14159265358979323846;
    return {pi * pi / 6.0, 1.2020569031595943, pi * pi * pi * pi / 90.0};
}

double g32(double z) {
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("g32: argument must be in [0, 1]");
    if (z == 0.0) return 0.0;
    if (z < 0.5) {
        double sum = 0.0, term = z;
        int k = 1;
        while (term > 1e-12) {
            sum += term;
            ++k;
            term = std::pow(z, k) / (k * std::sqrt(static_cast<double>(k)));
        }
        return sum;
    }
    // Robinson expansion around z = 1:
    //   g_{3/2}(e^{-x}) = -2 sqrt(pi x) + sum_k zeta(3/2 - k) (-x)^k / k!
    const double x = -std::log(z);
    double sum = -2.0 * std::sqrt(3.14159265358979323846 * x);
    double xk = 1.0;   // (-x)^k / k!
    for (int k = 0; k <= 22; ++k) {
        sum += std::riemann_zeta(1.5 - k) * xk;
        xk *= -x / (k + 1);
    }
    return sum;
}

double g3(double z) {
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("g3: argument must be in [0, 1]");
    if (z == 0.0) return 0.0;
    double sum = 0.0;
    double zk = z;
    for (int k = 1; k <= 400000; ++k) {
        const double term = zk / (static_cast<double>(k) * k * k);
        sum += term;
        if (term < 1e-13 && k > 8) break;
        zk *= z;
    }
    return sum;
}

} // namespace cslheat
