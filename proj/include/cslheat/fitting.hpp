#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cslheat/thermo.hpp"

namespace cslheat {

enum class series_kind { particle_number, condensate_fraction };

/// Measured decay samples. Times must be strictly increasing; values
/// positive (fractions additionally <= 1).
struct decay_series {
    std::vector<double> t_s;
    std::vector<double> value;
    std::vector<double> sigma;   // optional, empty = unit weights
    series_kind kind = series_kind::particle_number;

    void validate() const;
    std::size_t size() const { return t_s.size(); }
};

struct fit_result {
    series_kind kind = series_kind::particle_number;

    // number fit: {K3c, N0, tau_cool}
    double k3c_m6_s = 0, k3c_sigma = 0;
    double n0 = 0, n0_sigma = 0;
    double tau_cool_s = 0, tau_cool_sigma = 0;
    double tau_n_s = 0, tau_n_sigma = 0;   // derived from the fitted model

    // fraction fit: {f0, tau_f}
    double f0 = 0, f0_sigma = 0;
    double tau_f_s = 0, tau_f_sigma = 0;

    double rss = 0;
    std::vector<double> covariance;   // p x p row-major
    bool converged = true;
};

/// Fixed-temperature decay model: integrates
///   dN/dt = tbr_loss_rate(state(N; T fixed)) - N/tau_cool
/// and returns N at the requested times. The thermodynamic state is rebuilt
/// from the current N at every evaluation (T frozen, per the fit recipe).
std::vector<double> model_number_decay(double k3c_m6_s, double n0,
                                       double tau_cool_s,
                                       const thermo_state& state_template,
                                       const std::vector<double>& t_grid_s);

/// Initial-slope lifetime of the model: N0 / (|dN/dt| at t=0).
double model_tau_n(double k3c_m6_s, double n0, double tau_cool_s,
                   const thermo_state& state_template);

/// Least-squares fit of {K3c, N0, tau_cool}: multi-start Nelder-Mead from 5
/// deterministic seeds around moment-based guesses, refined by
/// Levenberg-Marquardt; covariance from the finite-difference Hessian at the
/// optimum. f0 fixes the temperature via temperature_from_fraction using the
/// first datum's atom number.
fit_result fit_number_decay(const decay_series& data,
                            const trap_geometry& trap, const species& sp,
                            double f0);

/// Least-squares exponential fit f(t) = f0 exp(-t/tau_f).
fit_result fit_fraction_decay(const decay_series& data);

struct mc_summary {
    std::vector<double> mean;
    std::vector<double> sigma;
    int n_samples = 0;
};

/// Monte Carlo propagation: draw each parameter independently from
/// N(mean, sigma), push every sample through `pipeline`, report the
/// per-output mean and standard deviation. Sample index i uses the
/// deterministic RNG substream (seed, i). Samples the pipeline rejects
/// (by throwing) are redrawn, up to a bounded number of attempts.
mc_summary propagate_uncertainty(
    const std::vector<double>& means, const std::vector<double>& sigmas,
    const std::function<std::vector<double>(const std::vector<double>&)>& pipeline,
    int n_samples, std::uint64_t seed);

} // namespace cslheat
