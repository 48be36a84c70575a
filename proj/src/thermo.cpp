#include "cslheat/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "cslheat/bose_func.hpp"
#include "cslheat/constants.hpp"

namespace cslheat {

namespace {
constexpr double pi = 3.14159265358979323846;

double condensate_fraction(double s, double eta) {
    const auto z = zeta_constants();
    const double s3 = s * s * s;
    return 1.0 - s3 -
           (z.zeta2 / z.zeta3) * eta * s * s * std::pow(1.0 - s3, 0.4);
}

double eta_of(double n, const trap_geometry& trap, const species& sp,
              double t_c_nk) {
    const double t_c_j = joule_from_nk(t_c_nk);
    return hbar_js * trap.omega_bar_rad_s / (2.0 * t_c_j) *
           std::pow(15.0 * n * sp.scattering_length_m / trap.a_ho_m, 0.4);
}
} // namespace

double t_c_ideal_nk(double n, const trap_geometry& trap) {
    if (n <= 0.0)
        throw std::invalid_argument("t_c_ideal: atom number must be > 0");
    const auto z = zeta_constants();
    return nk_from_joule(hbar_js * trap.omega_bar_rad_s *
                         std::cbrt(n / z.zeta3));
}

ideal_fraction_result ideal_fractions(double n, double temperature_nk,
                                      const trap_geometry& trap) {
    const double t_c = t_c_ideal_nk(n, trap);
    if (temperature_nk >= t_c) return {n, 0.0, 0.0};
    const double s3 = std::pow(temperature_nk / t_c, 3);
    return {n * s3, n * (1.0 - s3), 1.0 - s3};
}

ideal_energy_result ideal_energy_and_heat(double n, double temperature_nk,
                                          const trap_geometry& trap) {
    const auto z = zeta_constants();
    const double t_c = t_c_ideal_nk(n, trap);
    const double s = temperature_nk / t_c;
    const double u = n * 3.0 * t_c * std::pow(s, 4) * z.zeta4 / z.zeta3;
    const double c = 12.0 * std::pow(s, 3) * z.zeta4 / z.zeta3;
    return {u, c};
}

double lambda_ideal_only_csl(double temperature_nk, double t_c_nk,
                             double tau_f_s, const csl_params& csl,
                             const species& sp) {
    if (tau_f_s <= 0.0)
        throw std::invalid_argument("lambda_ideal_only_csl: tau_f must be > 0");
    const auto z = zeta_constants();
    const double a2 = static_cast<double>(sp.mass_number) * sp.mass_number;
    const double s3 = std::pow(temperature_nk / t_c_nk, 3);
    return (temperature_nk / csl.t_csl_nk(sp)) * (1.0 - s3) *
           (16.0 * z.zeta4) / (3.0 * z.zeta3) / (a2 * tau_f_s);
}

thermo_state hf_state(double n, double temperature_nk,
                      const trap_geometry& trap, const species& sp) {
    if (n <= 0.0)
        throw std::invalid_argument("hf_state: atom number must be > 0");
    thermo_state st;
    st.n_atoms = n;
    st.temperature_nk = temperature_nk;
    st.trap = trap;
    st.sp = sp;
    st.t_c_nk = t_c_ideal_nk(n, trap);
    st.s = temperature_nk / st.t_c_nk;
    if (!(st.s > 0.0) || st.s >= 1.0)
        throw std::domain_error("hf_state: requires 0 < T < T_c");
    st.eta = eta_of(n, trap, sp, st.t_c_nk);
    const double s3 = st.s * st.s * st.s;
    st.mu_nk = st.t_c_nk * st.eta * std::pow(1.0 - s3, 0.4);
    st.f = condensate_fraction(st.s, st.eta);
    if (st.f <= 0.0)
        throw std::domain_error(
            "hf_state: condensate fraction vanished (T too close to T_c)");
    const auto z = zeta_constants();
    st.u_per_n_nk =
        st.t_c_nk * (3.0 * z.zeta4 / z.zeta3 * std::pow(st.s, 4) +
                     st.eta / 7.0 * std::pow(1.0 - s3, 0.4) * (5.0 + 16.0 * s3));
    return st;
}

thermo_derivatives hf_derivatives(const thermo_state& st) {
    const auto z = zeta_constants();
    const double s = st.s, eta = st.eta;
    const double s2 = s * s, s3 = s2 * s;
    const double om = 1.0 - s3;
    const double om35 = std::pow(om, 0.6);
    const double r23 = z.zeta2 / z.zeta3;

    thermo_derivatives d;
    d.c_kb = 12.0 * s3 * z.zeta4 / z.zeta3 +
             6.0 * s2 * eta * (1.0 - 56.0 * s3 / 35.0) / om35;
    d.mu_n_nk = st.t_c_nk * eta * (5.0 + s3) / (5.0 * om35);
    d.f_t_per_nk = -3.0 * s3 / st.temperature_nk -
                   2.0 * eta * r23 * s2 * (5.0 - 8.0 * s3) /
                       (5.0 * st.temperature_nk * om35);
    d.f_n = s3 + eta * r23 * s2 * (9.0 - 15.0 * s3) / (15.0 * om35);
    return d;
}

double temperature_from_fraction(double f_target, double n,
                                 const trap_geometry& trap, const species& sp) {
    if (f_target <= 0.0 || f_target >= 1.0)
        throw std::domain_error(
            "temperature_from_fraction: target must be in (0,1)");
    const double t_c = t_c_ideal_nk(n, trap);
    const double eta = eta_of(n, trap, sp, t_c);

    // f(s) decreases monotonically from 1 at s=0; bracketed bisection.
    double lo = 0.0, hi = 1.0 - 1e-12;
    if (condensate_fraction(hi, eta) > f_target)
        throw std::domain_error("temperature_from_fraction: no root in (0,1)");
    while (hi - lo > 1e-6 * 0.5) {
        const double mid = 0.5 * (lo + hi);
        if (condensate_fraction(mid, eta) > f_target)
            lo = mid;
        else
            hi = mid;
    }
    // polish with a few secant steps for round-trip closure well below 1e-6
    double s0 = lo, s1 = hi;
    double g0 = condensate_fraction(s0, eta) - f_target;
    for (int i = 0; i < 8; ++i) {
        const double g1 = condensate_fraction(s1, eta) - f_target;
        if (g1 == g0) break;
        const double s2 = s1 - g1 * (s1 - s0) / (g1 - g0);
        s0 = s1; g0 = g1;
        s1 = std::min(std::max(s2, 0.0), 1.0 - 1e-12);
    }
    return s1 * t_c;
}

double interaction_g(const species& sp) {
    return 4.0 * pi * hbar_js * hbar_js * sp.scattering_length_m / sp.mass_kg;
}

double thomas_fermi_radius_m(const thermo_state& st) {
    const double mu_j = joule_from_nk(st.mu_nk);
    const double w = st.trap.omega_bar_rad_s;
    return std::sqrt(2.0 * mu_j / (st.sp.mass_kg * w * w));
}

double density_condensate(double r_m, const thermo_state& st) {
    const double mu_j = joule_from_nk(st.mu_nk);
    const double w = st.trap.omega_bar_rad_s;
    const double v = 0.5 * st.sp.mass_kg * w * w * r_m * r_m;
    if (v >= mu_j) return 0.0;
    return (mu_j - v) / interaction_g(st.sp);
}

thermal_density_result density_thermal_ex(double r_m, const thermo_state& st) {
    const double t_j = joule_from_nk(st.temperature_nk);
    const double lambda_t =
        hbar_js * std::sqrt(2.0 * pi / (st.sp.mass_kg * t_j));
    const double w = st.trap.omega_bar_rad_s;
    const double v = 0.5 * st.sp.mass_kg * w * w * r_m * r_m;
    const double mu_j = joule_from_nk(st.mu_nk);
    const double n0 = density_condensate(r_m, st);
    const double arg = -(v + 2.0 * interaction_g(st.sp) * n0 - mu_j) / t_j;
    thermal_density_result res;
    res.clamped = arg > 0.0;
    const double zf = std::exp(std::min(arg, 0.0));
    res.value_per_m3 = g32(zf) / (lambda_t * lambda_t * lambda_t);
    return res;
}

double density_thermal(double r_m, const thermo_state& st) {
    return density_thermal_ex(r_m, st).value_per_m3;
}

} // namespace cslheat
