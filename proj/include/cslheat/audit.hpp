#pragma once

#include <cstdint>
#include <vector>

#include "cslheat/loss_heating.hpp"
#include "cslheat/thermo.hpp"

namespace cslheat {

struct value_sigma {
    double value = 0;
    double sigma = 0;
};

/// Everything the energy audit needs for one trap: fitted lifetimes with
/// their uncertainties, trap/species constants, and the environment model.
struct audit_input {
    trap_geometry trap;
    species sp;

    value_sigma n0;          // atom count at t=0
    value_sigma f0;          // condensate fraction at t=0
    value_sigma tau_n_s;     // initial-slope number lifetime
    value_sigma tau_f_s;     // fraction lifetime
    value_sigma k3c_m6_s;    // recorded; the audit algebra uses tau_n
    value_sigma tau_cool_s;

    double tau1_s = 320.0;           // background-collision time
    double jitter_psd_m2_hz = 0.0;   // position-noise PSD at omega_tr
    double jitter_omega_rad_s = 0.0; // 0 = use trap omega_bar
    double a_csl_m = 1e-7;

    void validate() const;
};

struct audit_report {
    value_sigma du_dt_exp_nk_s;
    value_sigma cool_nk_s;
    value_sigma tbr_heat_nk_s;
    value_sigma background_nk_s;
    value_sigma jitter_nk_s;
    value_sigma w_nk_s;        // sum of the channels above
    value_sigma r_in_nk_s;     // du_dt_exp - w, exact for the central values
    value_sigma lambda_bound_per_s;
    bool lambda_constraining = false;   // false when r_in <= 0
    bool evaporation_included = true;   // false when e_b invalid

    // thermodynamic echo (central values)
    double temperature_nk = 0;
    double t_c_nk = 0;
    double eta = 0;
    double s = 0;
    double u_per_n_nk = 0;
    double mu_n_nk = 0;
};

/// (1/N) dU/dt at t=0 from fitted lifetimes and Hartree-Fock derivatives:
///   (C/f_T)[f_N/tau_N - f/tau_f] - mu_N/tau_N.
double du_dt_experimental(const audit_input& input);

/// dT/dt at t=0: (1/f_T)[f_N/tau_N - f/tau_f].
double dt_dt_initial(const audit_input& input);

/// Assemble the known channels, subtract them from the experimental energy
/// rate, and bound the collapse rate from the residual. Uncertainties by
/// Monte Carlo over the fitted inputs (deterministic in seed).
audit_report residual_heating(const audit_input& input, int mc_samples = 400,
                              std::uint64_t seed = 0);

/// lambda < r_in * 4 / (3 A^2 t_csl). Non-positive residuals bound nothing
/// and are reported as 0 with constraining=false (second member of pair).
std::pair<value_sigma, bool> lambda_bound(value_sigma r_in_nk_s,
                                          const species& sp, double a_csl_m);

struct aggregate_result {
    value_sigma r_in_mean_nk_s;
    value_sigma lambda_per_s;
    double scatter_sd_nk_s = 0;   // population scatter of the per-trap values
    bool lambda_constraining = false;
};

/// Unweighted mean of per-trap residuals; sigma is the larger of the
/// scatter-based standard error and the propagated mean sigma.
aggregate_result aggregate_traps(const std::vector<audit_report>& reports,
                                 const species& sp, double a_csl_m);

} // namespace cslheat
