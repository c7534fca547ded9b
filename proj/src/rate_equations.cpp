#include "eitcool/rate_equations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "eitcool/cooling.hpp"
#include "eitcool/error.hpp"

namespace eitcool {

namespace odeint = boost::numeric::odeint;

double FockDistribution::total() const
{
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

double FockDistribution::mean() const
{
    double weighted = 0.0;
    for (std::size_t n = 0; n < probs.size(); ++n)
        weighted += static_cast<double>(n) * probs[n];
    return weighted / total();
}

FockDistribution thermal_distribution(double mean, std::size_t n_max)
{
    if (!(mean >= 0) || !std::isfinite(mean))
        throw Error(ErrorCode::InvalidParameter, "thermal mean must be finite and >= 0");
    FockDistribution d;
    d.probs.assign(n_max + 1, 0.0);
    const double ratio = mean / (mean + 1.0);
    double p = 1.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        d.probs[n] = p;
        p *= ratio;
    }
    const double norm = d.total();
    for (auto& x : d.probs)
        x /= norm;
    return d;
}

LadderRates ladder_rates(const SystemParams& p, const SteadyState& ss)
{
    const auto f = cooling_figures(p, ss);
    const double g2 = ss.g_eff * ss.g_eff;
    LadderRates r;
    r.optical_down = g2 * f.s_plus;   // anti-Stokes, Gamma_{n <- n+1} / (n+1)
    r.optical_up = g2 * f.s_minus;    // Stokes, Gamma_{n+1 <- n} / (n+1)
    r.thermal_down = p.gamma_m * (p.n_thermal + 1.0);
    r.thermal_up = p.gamma_m * p.n_thermal;
    return r;
}

TridiagonalGenerator build_generator(const LadderRates& rates, std::size_t n_max)
{
    const std::size_t size = n_max + 1;
    TridiagonalGenerator g;
    g.diag.assign(size, 0.0);
    g.sub.assign(n_max, 0.0);
    g.super.assign(n_max, 0.0);
    for (std::size_t n = 0; n < size; ++n) {
        const double to_lower = rates.optical_down * n + rates.thermal_down * n;
        const double to_upper = rates.optical_up * (n + 1) + rates.thermal_up * (n + 1);
        g.diag[n] = -(to_lower + to_upper);
        if (n > 0)
            g.super[n - 1] = to_lower;  // feeds P_{n-1}
        if (n < n_max)
            g.sub[n] = to_upper;        // feeds P_{n+1}
    }
    return g;
}

void TridiagonalGenerator::apply(std::span<const double> x, std::span<double> dxdt) const
{
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0)
            v += sub[i - 1] * x[i - 1];
        if (i + 1 < n)
            v += super[i] * x[i + 1];
        dxdt[i] = v;
    }
}

std::vector<FockDistribution> trace_rate_equations(const SystemParams& p, const SteadyState& ss,
                                                   const FockDistribution& initial,
                                                   std::span<const double> times,
                                                   std::size_t n_max,
                                                   const RateEquationOptions& options)
{
    if (n_max < 1)
        throw Error(ErrorCode::InvalidParameter, "n_max must be >= 1");
    if (initial.probs.size() > n_max + 1)
        throw Error(ErrorCode::InvalidParameter, "initial distribution exceeds n_max");
    if (initial.probs.empty() || std::abs(initial.total() - 1.0) > 1e-9)
        throw Error(ErrorCode::InvalidParameter, "initial distribution must be normalized");
    if (std::any_of(initial.probs.begin(), initial.probs.end(), [](double x) { return !(x >= 0); }))
        throw Error(ErrorCode::InvalidParameter, "initial probabilities must be >= 0");
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && !(times.front() >= 0)))
        throw Error(ErrorCode::InvalidParameter, "checkpoint times must be non-negative and sorted");

    std::vector<double> state = initial.probs;
    state.resize(n_max + 1, 0.0);
    if (state.back() >= options.max_initial_tail)
        throw Error(ErrorCode::TruncationTooSmall,
                    "initial tail mass P_" + std::to_string(n_max) + " = " +
                        std::to_string(state.back()) + " is too large for n_max");

    const LadderRates rates = ladder_rates(p, ss);
    const TridiagonalGenerator gen = build_generator(rates, n_max);
    const bool heating = rates.up() >= rates.down();

    auto rhs = [&gen](const std::vector<double>& x, std::vector<double>& dxdt, double) {
        gen.apply(x, dxdt);
    };
    auto check = [&](const std::vector<double>& x, double t) {
        double mass = 0.0;
        double weighted = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n) {
            mass += x[n];
            weighted += static_cast<double>(n) * x[n];
        }
        if (weighted / mass > 0.5 * static_cast<double>(n_max))
            throw Error(ErrorCode::Divergence,
                        "mean phonon number exceeded n_max/2 at t = " + std::to_string(t));
        if (x.back() > options.max_tail) {
            if (heating)
                throw Error(ErrorCode::Divergence,
                            "heating-dominated ladder reached the truncation at t = " + std::to_string(t));
            throw Error(ErrorCode::TruncationTooSmall,
                        "tail mass P_" + std::to_string(n_max) + " exceeded " +
                            std::to_string(options.max_tail) + " at t = " + std::to_string(t));
        }
    };

    // The fastest relaxation scale of the ladder is ~ 2 (n_max + 1)(up + down);
    // start well inside the explicit stability region and let the controller grow.
    const double fastest = 2.0 * static_cast<double>(n_max + 1) * (rates.up() + rates.down());
    double dt = fastest > 0 ? 0.1 / fastest : 1.0;

    using Stepper = odeint::runge_kutta_dopri5<std::vector<double>>;
    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, Stepper());

    std::vector<FockDistribution> out;
    out.reserve(times.size());
    double t = 0.0;
    check(state, t);
    for (double target : times) {
        if (target > t) {
            odeint::integrate_adaptive(stepper, rhs, state, t, target, dt, check);
            t = target;
        }
        FockDistribution d{state};
        // Round-off of order abs_tol can leave empty levels slightly negative.
        for (auto& x : d.probs)
            if (x < 0 && x > -100 * options.abs_tol)
                x = 0.0;
        out.push_back(std::move(d));
    }
    return out;
}

FockDistribution integrate_rate_equations(const SystemParams& p, const SteadyState& ss,
                                          const FockDistribution& initial, double t_final,
                                          std::size_t n_max, const RateEquationOptions& options)
{
    if (!(t_final >= 0) || !std::isfinite(t_final))
        throw Error(ErrorCode::InvalidParameter, "t_final must be finite and >= 0");
    const double times[] = {t_final};
    return std::move(trace_rate_equations(p, ss, initial, times, n_max, options).front());
}

}  // namespace eitcool
