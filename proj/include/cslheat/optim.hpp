#pragma once

#include <functional>
#include <vector>

namespace cslheat {

struct nelder_mead_options {
    int max_iter = 600;
    double x_tol = 1e-10;
    double f_tol = 1e-12;
};

/// Derivative-free simplex minimization. Returns the best vertex.
std::vector<double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const std::vector<double>& initial_step,
    const nelder_mead_options& opt = {});

struct lm_options {
    int max_iter = 200;
    double f_tol = 1e-12;
    double x_tol = 1e-12;
    double fd_step = 1e-6;   // relative finite-difference step
};

struct lm_result {
    std::vector<double> x;
    double rss = 0;
    std::vector<double> covariance;   // p x p row-major, RSS/(n-p) (J^T J)^-1
    bool converged = false;
    int iterations = 0;
};

/// Levenberg-Marquardt with finite-difference Jacobian on the residual
/// vector r(x); minimizes sum r_i^2.
lm_result levenberg_marquardt(
    const std::function<std::vector<double>(const std::vector<double>&)>& residuals,
    std::vector<double> x0, const lm_options& opt = {});

} // namespace cslheat
