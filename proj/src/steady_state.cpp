#include "eitcool/steady_state.hpp"

#include <cmath>

#include "eitcool/error.hpp"

namespace eitcool {

using namespace std::complex_literals;

SteadyState solve_steady_state(const SystemParams& p)
{
    return solve_steady_state(p, std::complex<double>(p.drive_eps, 0.0));
}

SteadyState solve_steady_state(const SystemParams& p, std::complex<double> drive)
{
    p.validate();
    const double J = p.coupling_J;
    const std::complex<double> cavity2(p.kappa2, p.delta2);

    std::complex<double> denom(p.kappa1, p.delta1);
    if (J > 0) {
        if (cavity2 == 0.0)
            throw Error(ErrorCode::ZeroDenominator,
                        "kappa2 = delta2 = 0 with J > 0: cavity 2 response is singular");
        denom += J * J / cavity2;
    }
    if (denom == 0.0)
        throw Error(ErrorCode::ZeroDenominator, "alpha1 denominator vanishes");

    SteadyState ss;
    ss.alpha1 = drive / denom;
    ss.alpha2 = J > 0 ? -1i * J * ss.alpha1 / cavity2 : std::complex<double>{};
    const double photons = std::norm(ss.alpha1);
    ss.beta = 1i * p.g0 * photons / std::complex<double>(p.gamma_m, p.omega_m);
    ss.g_eff = p.g_mode == CouplingMode::Fixed ? p.g_fixed : p.g0 * std::sqrt(photons);
    ss.delta1_bare = p.delta1 + 2.0 * p.g0 * ss.beta.real();
    return ss;
}

}  // namespace eitcool
