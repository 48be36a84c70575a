#pragma once

#include "cslheat/species.hpp"

namespace cslheat {

/// Harmonic trap with three frequencies and a finite depth.
/// omega_bar = 2 pi (f1 f2 f3)^{1/3}; the escape energy e_b is the depth
/// minus the zero-point energy (hbar/2)(w1+w2+w3).
struct trap_geometry {
    double f1_hz = 0, f2_hz = 0, f3_hz = 0;
    double depth_nk = 0;

    // derived
    double omega_bar_rad_s = 0;
    double a_ho_m = 0;          // sqrt(hbar / (m omega_bar))
    double zero_point_nk = 0;
    double e_b_nk = 0;
    bool e_b_valid = false;     // false when depth <= zero point
};

/// Fill the derived fields. Throws std::invalid_argument for non-positive
/// frequencies; a depth at or below the zero-point energy only flags
/// e_b_valid=false (the audit then refuses the evaporation term).
trap_geometry trap_derived(double f1_hz, double f2_hz, double f3_hz,
                           double depth_nk, const species& sp);

} // namespace cslheat
