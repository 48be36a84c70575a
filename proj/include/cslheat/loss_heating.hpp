#pragma once

#include "cslheat/thermo.hpp"

namespace cslheat {

/// Per-channel energy rates (nK/s per atom) and the TBR particle loss.
struct channel_rates {
    double dn_dt_tbr = 0;            // count/s, <= 0
    double du_dt_cool_nk_s = 0;      // <= 0
    double du_dt_tbr_nk_s = 0;       // >= 0
    double du_dt_background_nk_s = 0;
    double du_dt_jitter_nk_s = 0;    // >= 0
};

/// Radial integrals of the density polynomial entering three-body loss.
struct tbr_integrals {
    double i30 = 0;   // int n0^3
    double i21 = 0;   // int n0^2 nT
    double i12 = 0;   // int n0 nT^2
    double i03 = 0;   // int nT^3
    double polynomial() const { return i30 + 9 * i21 + 18 * i12 + 6 * i03; }
};
tbr_integrals tbr_density_integrals(const thermo_state& state);

/// dN/dt = -3 K3c * int [n0^3 + 9 n0^2 nT + 18 n0 nT^2 + 6 nT^3]  (< 0).
double tbr_loss_rate(const thermo_state& state, double k3c_m6_s);

/// Evaporative cooling power per atom: -1.12 E_B / tau_cool.
double evap_cooling_rate(const trap_geometry& trap, double tau_cool_s);

/// TBR heating per atom: (E_av - E_cond)/tau_N with E_cond = (5/7) eta T_c.
double tbr_heating_rate(const thermo_state& state, double tau_n_s);

/// Background-gas energy rate per atom: -(U/N)/tau_1.
double background_energy_rate(const thermo_state& state, double tau_1_s);

/// Laser position-jitter heating (pi/2) m w^4 S(w), converted to nK/s.
double laser_jitter_rate(double omega_tr_rad_s, double s_psd_m2_hz,
                         const species& sp);

} // namespace cslheat
