#include "eitcool/optimizer.hpp"

#include <cmath>
#include <limits>

#include "eitcool/error.hpp"
#include "eitcool/steady_state.hpp"

namespace eitcool {

double optimal_J_for_delta1(double delta1, double omega_m)
{
    if (!std::isfinite(delta1) || !(omega_m > 0))
        throw Error(ErrorCode::InvalidParameter, "delta1 must be finite and omega_m > 0");
    if (delta1 > omega_m)
        throw Error(ErrorCode::UnsupportedRegime,
                    "delta1 > omega_m: no real coupling places the upper mode at +omega_m");
    return std::sqrt(2.0 * omega_m * (omega_m - delta1));
}

double delta1_for_optimal_J(double J, double omega_m)
{
    if (!(J >= 0) || !std::isfinite(J) || !(omega_m > 0))
        throw Error(ErrorCode::InvalidParameter, "J must be finite and >= 0");
    return omega_m - J * J / (2.0 * omega_m);
}

SystemParams at_optimal_conditions(const SystemParams& tmpl)
{
    SystemParams p = tmpl;
    p.delta2 = -p.omega_m;
    p.delta1 = delta1_for_optimal_J(p.coupling_J, p.omega_m);
    return p;
}

OptimalPoint optimal_point(const SystemParams& tmpl)
{
    const SystemParams p = at_optimal_conditions(tmpl);
    const auto ss = solve_steady_state(p);
    OptimalPoint o;
    o.delta2_opt = p.delta2;
    o.coupling_J = p.coupling_J;
    o.delta1_opt = p.delta1;
    o.g = ss.g_eff;
    o.predicted = cooling_figures(p, ss);
    return o;
}

std::string describe_row_flags(unsigned flags)
{
    if (flags == kRowOk)
        return "ok";
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty())
            s += '|';
        s += name;
    };
    if (flags & kRowHeating)
        add("heating");
    if (flags & kRowWeakCoupling)
        add("weak_coupling");
    if (flags & kRowDegenerate)
        add("degenerate");
    if (flags & kRowUnsupported)
        add("unsupported");
    if (flags & kRowSingular)
        add("singular");
    return s;
}

bool SweepRow::valid() const
{
    constexpr unsigned disqualifying = kRowHeating | kRowDegenerate | kRowUnsupported | kRowSingular;
    return (flags & disqualifying) == 0 && std::isfinite(figures.n_final);
}

SweepRow evaluate_point(const SystemParams& tmpl, double delta1, double J)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row;
    row.J = J;
    row.delta1 = delta1;
    row.figures = {nan, nan, nan, nan, nan, kCoolingOk};
    if (delta1 > tmpl.omega_m)
        row.flags |= kRowUnsupported;

    SystemParams p = tmpl;
    p.delta1 = delta1;
    p.coupling_J = J;
    try {
        const auto ss = solve_steady_state(p);
        row.g = ss.g_eff;
        const CoolingFigures figures = cooling_figures(p, ss);
        row.figures = figures;
        if (row.figures.flags & kNegativeCoolingRate)
            row.flags |= kRowHeating;
        if (row.figures.flags & kWeakCouplingViolated)
            row.flags |= kRowWeakCoupling;
    }
    catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::DegenerateSpectrum:
            row.flags |= kRowDegenerate;
            break;
        case ErrorCode::ZeroDenominator:
            row.flags |= kRowSingular;
            break;
        default:
            throw;
        }
    }
    return row;
}

namespace {

template <typename Rows>
std::optional<std::size_t> best_row(const Rows& rows)
{
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].valid())
            continue;
        if (!best || rows[i].figures.n_final < rows[*best].figures.n_final)
            best = i;
    }
    return best;
}

}  // namespace

SweepResult sweep_J(const SystemParams& tmpl, std::span<const double> J_grid, CouplingMode mode)
{
    SystemParams base = tmpl;
    base.g_mode = mode;
    base.delta2 = -base.omega_m;
    base.validate();

    SweepResult result;
    result.axis = "J";
    result.grid.assign(J_grid.begin(), J_grid.end());
    result.rows.reserve(J_grid.size());
    for (double J : J_grid)
        result.rows.push_back(evaluate_point(base, delta1_for_optimal_J(J, base.omega_m), J));
    result.best = best_row(result.rows);
    return result;
}

GridSearchResult grid_search(const SystemParams& tmpl, std::span<const double> delta1_grid,
                             std::span<const double> J_grid)
{
    SystemParams base = tmpl;
    base.delta2 = -base.omega_m;
    base.validate();

    GridSearchResult result;
    result.delta1_grid.assign(delta1_grid.begin(), delta1_grid.end());
    result.J_grid.assign(J_grid.begin(), J_grid.end());
    result.rows.reserve(delta1_grid.size() * J_grid.size());
    for (double d1 : delta1_grid)
        for (double J : J_grid)
            result.rows.push_back(evaluate_point(base, d1, J));
    result.best = best_row(result.rows);

    result.analytic = optimal_point(base);
    result.ratio = result.best
        ? result.analytic.predicted.n_final / result.rows[*result.best].figures.n_final
        : std::numeric_limits<double>::quiet_NaN();
    return result;
}

std::vector<double> arange(double lo, double hi, double step)
{
    if (!(step > 0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
        throw Error(ErrorCode::InvalidParameter, "grid needs lo <= hi and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = lo + step * static_cast<double>(i);
    return grid;
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    if (n < 2 || !(hi > lo))
        throw Error(ErrorCode::InvalidParameter, "linspace needs n >= 2 and hi > lo");
    std::vector<double> grid(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = lo + step * static_cast<double>(i);
    grid.back() = hi;
    return grid;
}

}  // namespace eitcool
