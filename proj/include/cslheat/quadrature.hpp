#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace cslheat {

class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tol(achieved) {}
    double achieved_tol;
};

namespace detail {
template <class F>
double simpson_rec(F& f, double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) {
        if (std::abs(delta) > 15.0 * tol)
            throw quadrature_error("adaptive Simpson: recursion limit reached",
                                   std::abs(delta) / 15.0);
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
         + simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}
} // namespace detail

/// Adaptive Simpson quadrature with an absolute tolerance.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol,
                        int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, fa, b, fb, m, fm, whole, abs_tol,
                               max_depth);
}

/// 64-point Gauss-Legendre on [a, b].
double gauss_legendre_64(const double* nodes_unused, double a, double b);

template <class F>
double gauss_legendre_64(F&& f, double a, double b) {
    extern const double gl64_nodes[32];
    extern const double gl64_weights[32];
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double x = h * gl64_nodes[i];
        sum += gl64_weights[i] * (f(c - x) + f(c + x));
    }
    return h * sum;
}

extern const double gl64_nodes[32];
extern const double gl64_weights[32];

} // namespace cslheat
