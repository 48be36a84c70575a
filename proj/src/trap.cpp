#include "cslheat/trap.hpp"

#include <cmath>
#include <stdexcept>

#include "cslheat/constants.hpp"

namespace cslheat {

trap_geometry trap_derived(double f1_hz, double f2_hz, double f3_hz,
                           double depth_nk, const species& sp) {
    if (f1_hz <= 0.0 || f2_hz <= 0.0 || f3_hz <= 0.0)
        throw std::invalid_argument("trap_derived: frequencies must be > 0");
    sp.validate();

    trap_geometry t;
    t.f1_hz = f1_hz;
    t.f2_hz = f2_hz;
    t.f3_hz = f3_hz;
    t.depth_nk = depth_nk;

    const double two_pi = 2.0 * 3.14159265358979323846;
    t.omega_bar_rad_s = two_pi * std::cbrt(f1_hz * f2_hz * f3_hz);
    t.a_ho_m = std::sqrt(hbar_js / (sp.mass_kg * t.omega_bar_rad_s));
    t.zero_point_nk =
        nk_from_joule(0.5 * hbar_js * two_pi * (f1_hz + f2_hz + f3_hz));
    t.e_b_nk = depth_nk - t.zero_point_nk;
    t.e_b_valid = t.e_b_nk > 0.0;
    return t;
}

} // namespace cslheat
