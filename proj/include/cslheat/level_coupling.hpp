#pragma once

namespace cslheat {

enum class potential_kind { box, harmonic };

/// Single-particle basis for the discrete rate equations.
/// alpha is a/sigma for the harmonic oscillator and alpha' = pi a/sigma for
/// the box. The closed-form couplings assume alpha << 1; callers should
/// treat alpha > 0.3 as outside their comfort zone (see trustworthy()).
struct level_basis {
    potential_kind kind = potential_kind::harmonic;
    double sigma_m = 0;
    double alpha = 0;

    static level_basis box(double sigma_m, double a_csl_m);
    static level_basis harmonic(double sigma_m, double a_csl_m);
    bool trustworthy() const { return alpha <= 0.3; }
    void validate() const;
};

/// Closed-form level coupling I_nm.
///   box:      (a'/sqrt(pi)) [exp(-(n-m)^2 a'^2) + exp(-(n+m)^2 a'^2)]
///   harmonic: (a/sqrt(2 pi n)) [exp(-2a^2(sqrt n - sqrt m)^2)
///                               + exp(-2a^2(sqrt n + sqrt m)^2)]
/// n, m >= 1.
double coupling_closed_form(int n, int m, const level_basis& basis);

/// I_nm by quadrature of the exact two-dimensional integral (sine products
/// for the box, Hermite-function products for the oscillator), evaluated in
/// rotated coordinates with grid-refinement error control. Throws
/// quadrature_error carrying the achieved tolerance when rel_tol cannot be
/// met.
double coupling_numeric_1d(int n, int m, const level_basis& basis,
                           double rel_tol = 1e-6);

} // namespace cslheat
