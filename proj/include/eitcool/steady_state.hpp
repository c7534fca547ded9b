#pragma once

#include <complex>

#include "eitcool/params.hpp"

namespace eitcool {

// Classical operating point of the driven double-cavity system.
struct SteadyState {
    std::complex<double> alpha1;
    std::complex<double> alpha2;
    std::complex<double> beta;
    double g_eff = 0.0;        // g0 |alpha1|, or the fixed g
    double delta1_bare = 0.0;  // delta1 + g0 (beta + beta*), diagnostic only
};

// Closed-form mean fields for a real drive amplitude p.drive_eps.
// Throws Error(ZeroDenominator) when kappa2 = delta2 = 0 with J > 0.
SteadyState solve_steady_state(const SystemParams& p);

// Same, with an explicitly complex drive. Only |drive| enters g_eff and beta.
SteadyState solve_steady_state(const SystemParams& p, std::complex<double> drive);

}  // namespace eitcool
