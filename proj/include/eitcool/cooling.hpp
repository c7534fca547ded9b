#pragma once

#include <string>

#include "eitcool/params.hpp"
#include "eitcool/steady_state.hpp"

namespace eitcool {

enum CoolingFlag : unsigned {
    kCoolingOk = 0,
    // S_FF(-w_m) > S_FF(+w_m): optical heating outweighs cooling.
    kNegativeCoolingRate = 1u << 0,
    // g^2 max(S_FF(+-w_m)) > 0.1 kappa1, outside the weak-coupling picture.
    kWeakCouplingViolated = 1u << 1,
};

// Cooling characteristics at one parameter point.
//
// When gamma_m + gamma_c <= 0 the rate equations have no steady state and
// n_final is +infinity (flagged kNegativeCoolingRate).
struct CoolingFigures {
    double s_plus = 0.0;    // S_FF(+w_m)
    double s_minus = 0.0;   // S_FF(-w_m)
    double gamma_c = 0.0;   // g^2 (s_plus - s_minus)
    double n_limit = 0.0;   // s_minus / (s_plus - s_minus)
    double n_final = 0.0;   // (gamma_m n_m + gamma_c n_c) / (gamma_m + gamma_c)
    unsigned flags = kCoolingOk;

    bool heating() const { return (flags & kNegativeCoolingRate) != 0; }
};

std::string describe_flags(unsigned flags);

// Throws Error(DegenerateSpectrum) when S_FF(+w_m) == S_FF(-w_m), and
// Error(InvalidParameter) when both gamma_m and g vanish.
CoolingFigures cooling_figures(const SystemParams& p, const SteadyState& ss);

// Mean phonon number relaxing from n0 toward n_final at rate gamma_c + gamma_m:
//   <n>(t) = n_f + (n0 - n_f) exp(-(gamma_c + gamma_m) t).
double evolve_mean_phonon(const SystemParams& p, const SteadyState& ss, double n0, double t);

}  // namespace eitcool
