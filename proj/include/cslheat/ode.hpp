#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cslheat {

struct ode_options {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double max_dt = 0.0;        // 0 = unbounded
    std::size_t max_steps = 2000000;
};

/// Adaptive Dormand-Prince RK45 on a flat state vector.
/// rhs(t, y, dydt) fills dydt. Throws std::runtime_error on step-size
/// underflow or step-count exhaustion.
template <class RHS>
std::vector<double> integrate_rk45(RHS&& rhs, std::vector<double> y,
                                   double t0, double t1,
                                   const ode_options& opt = {}) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    if (t1 == t0) return y;
    if (t1 < t0) throw std::invalid_argument("integrate_rk45: t1 < t0");

    const std::size_t n = y.size();
    std::vector<double> k1(n), k2(n), k3v(n), k4(n), k5(n), k6(n), k7(n),
        ytmp(n), ynew(n);

    double t = t0;
    double dt = (t1 - t0) / 100.0;
    if (opt.max_dt > 0.0 && dt > opt.max_dt) dt = opt.max_dt;

    rhs(t, y, k1);
    std::size_t steps = 0;
    while (t < t1) {
        if (++steps > opt.max_steps)
            throw std::runtime_error("integrate_rk45: step budget exhausted");
        if (t + dt > t1) dt = t1 - t;
        if (!(dt > 1e-14 * (std::abs(t) + 1.0)))
            throw std::runtime_error("integrate_rk45: step size underflow");

        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * a21 * k1[i];
        rhs(t + c2 * dt, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * dt, ytmp, k3v);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3v[i]);
        rhs(t + c4 * dt, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3v[i] +
                                   a54 * k4[i]);
        rhs(t + c5 * dt, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3v[i] +
                                   a64 * k4[i] + a65 * k5[i]);
        rhs(t + dt, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + dt * (b1 * k1[i] + b3 * k3v[i] + b4 * k4[i] +
                                   b5 * k5[i] + b6 * k6[i]);
        rhs(t + dt, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = dt * (e1 * k1[i] + e3 * k3v[i] + e4 * k4[i] +
                                   e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.abs_tol +
                opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = e / sc;
            err += r * r;
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0) {
            t += dt;
            y.swap(ynew);
            k1.swap(k7);   // FSAL
        } else {
            rhs(t, y, k1); // k1 must match y again
        }
        double fac = 0.9 * std::pow(err > 0 ? err : 1e-10, -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        dt *= fac;
        if (opt.max_dt > 0.0 && dt > opt.max_dt) dt = opt.max_dt;
    }
    return y;
}

} // namespace cslheat
