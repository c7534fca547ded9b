#include "eitcool/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "eitcool/error.hpp"

namespace eitcool {

namespace {

bool at_pole(double omega, const SystemParams& p)
{
    return p.kappa2 == 0.0 && p.coupling_J > 0.0 && omega == p.delta2;
}

}  // namespace

std::complex<double> response_A(double omega, const SystemParams& p)
{
    if (at_pole(omega, p))
        throw Error(ErrorCode::PoleAtDip, "A(w) has a pole at w = delta2 when kappa2 = 0");
    std::complex<double> a(p.kappa1, -(omega - p.delta1));
    const double J2 = p.coupling_J * p.coupling_J;
    if (J2 > 0)
        a += J2 / std::complex<double>(p.kappa2, -(omega - p.delta2));
    return a;
}

double eval_S_FF(double omega, const SystemParams& p)
{
    if (at_pole(omega, p))
        return 0.0;
    const auto a = response_A(omega, p);
    return 2.0 * a.real() / std::norm(a);
}

NormalModes normal_modes(const SystemParams& p)
{
    const double mean = 0.5 * (p.delta1 + p.delta2);
    const double half_gap = 0.5 * (p.delta1 - p.delta2);
    const double split = std::hypot(p.coupling_J, half_gap);

    NormalModes m;
    m.delta_prime_1 = mean + split;
    m.delta_prime_2 = mean - split;
    if (p.delta1 == p.delta2)
        m.mixing_theta = p.coupling_J > 0 ? std::numbers::pi / 4 : 0.0;
    else
        m.mixing_theta = 0.5 * std::atan(2.0 * p.coupling_J / (p.delta1 - p.delta2));
    return m;
}

SpectrumCurve sample_spectrum(const SystemParams& p, double lo, double hi, std::size_t n_points)
{
    p.validate();
    if (n_points < 2)
        throw Error(ErrorCode::InvalidParameter, "n_points must be >= 2");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw Error(ErrorCode::InvalidParameter, "omega range must satisfy lo < hi");

    SpectrumCurve curve;
    curve.omegas.resize(n_points);
    curve.values.resize(n_points);
    const double step = (hi - lo) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double w = i + 1 == n_points ? hi : lo + step * static_cast<double>(i);
        curve.omegas[i] = w;
        curve.values[i] = eval_S_FF(w, p);
    }
    const auto modes = normal_modes(p);
    curve.landmarks = {p.delta2, modes.delta_prime_2, modes.delta_prime_1};
    return curve;
}

}  // namespace eitcool
