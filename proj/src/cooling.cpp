#include "eitcool/cooling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eitcool/error.hpp"
#include "eitcool/spectrum.hpp"

namespace eitcool {

std::string describe_flags(unsigned flags)
{
    if (flags == kCoolingOk)
        return "ok";
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty())
            s += '|';
        s += name;
    };
    if (flags & kNegativeCoolingRate)
        add("heating");
    if (flags & kWeakCouplingViolated)
        add("weak_coupling");
    return s;
}

CoolingFigures cooling_figures(const SystemParams& p, const SteadyState& ss)
{
    p.validate();
    CoolingFigures f;
    f.s_plus = eval_S_FF(+p.omega_m, p);
    f.s_minus = eval_S_FF(-p.omega_m, p);
    if (f.s_plus == f.s_minus)
        throw Error(ErrorCode::DegenerateSpectrum,
                    "S_FF(+w_m) == S_FF(-w_m): cooling limit undefined");

    const double g2 = ss.g_eff * ss.g_eff;
    const double contrast = f.s_plus - f.s_minus;
    f.gamma_c = g2 * contrast;
    f.n_limit = f.s_minus / contrast;
    if (contrast < 0)
        f.flags |= kNegativeCoolingRate;
    if (g2 * std::max(f.s_plus, f.s_minus) > 0.1 * p.kappa1)
        f.flags |= kWeakCouplingViolated;

    const double total = p.gamma_m + f.gamma_c;
    if (p.gamma_m == 0.0 && f.gamma_c == 0.0)
        throw Error(ErrorCode::InvalidParameter, "gamma_m + gamma_c must be > 0 (gamma_m = 0 and g = 0)");
    if (total <= 0.0)
        f.n_final = std::numeric_limits<double>::infinity();
    else
        f.n_final = (p.gamma_m * p.n_thermal + f.gamma_c * f.n_limit) / total;
    return f;
}

double evolve_mean_phonon(const SystemParams& p, const SteadyState& ss, double n0, double t)
{
    const auto f = cooling_figures(p, ss);
    const double rate = f.gamma_c + p.gamma_m;
    if (!(rate > 0))
        throw Error(ErrorCode::InvalidParameter, "mean phonon relaxation needs gamma_c + gamma_m > 0");
    return f.n_final + (n0 - f.n_final) * std::exp(-rate * t);
}

}  // namespace eitcool
