#pragma once

#include <vector>

#include "cslheat/level_coupling.hpp"

namespace cslheat {

/// Occupations of the separable 3-D levels (n1,n2,n3), each index 1..n_max.
struct discrete_occupations {
    int n_max = 0;
    std::vector<double> occ;   // flattened, (n1-1) fastest

    static discrete_occupations zeros(int n_max);
    double& at(int n1, int n2, int n3);
    double at(int n1, int n2, int n3) const;
    double total() const;
};

/// Integrate the population rate equations with the separable closed-form
/// coupling. The 1-D coupling matrix columns are conservation-corrected on
/// the diagonal so that every generator column sums to zero exactly (the
/// property the exact couplings have from completeness).
///
/// leak_tol_fraction bounds the estimated occupancy that would have been
/// scattered beyond the n_max cutoff over [0,t]; exceeding it throws
/// std::runtime_error advising a larger n_max.
discrete_occupations evolve_discrete(const discrete_occupations& occ0,
                                     const level_basis& basis,
                                     double rate_a2, double t_s,
                                     double leak_tol_fraction = 1e-6);

/// Shell spectrum: sum of occupations with n1+n2+n3 = n, n = 3..3*n_max.
std::vector<double> shell_spectrum(const discrete_occupations& occ);

} // namespace cslheat
