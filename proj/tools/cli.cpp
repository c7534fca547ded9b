#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eitcool/config.hpp"
#include "eitcool/cooling.hpp"
#include "eitcool/csv.hpp"
#include "eitcool/error.hpp"
#include "eitcool/optimizer.hpp"
#include "eitcool/params.hpp"
#include "eitcool/rate_equations.hpp"
#include "eitcool/spectrum.hpp"
#include "eitcool/steady_state.hpp"

namespace eitcool::cli {

namespace {

struct Options {
    std::string config;
    std::vector<std::string> overrides;
    std::string out;

    double omega_lo = -5.0;
    double omega_hi = 5.0;
    std::size_t n_points = 1001;

    double J_lo = 0.2;
    double J_hi = 3.0;
    double J_step = 0.01;
    std::size_t J_n = 0;

    double delta1_lo = -3.0;
    double delta1_hi = 0.95;
    std::size_t delta1_n = 50;

    std::size_t n_max = 60;
    std::optional<double> t_final;
    std::optional<double> n0;
    bool analytic = false;
    std::string dist_out;

    int figure_id = 0;
};

SystemParams resolve_params(const Options& o)
{
    RawParams raw;
    if (!o.config.empty())
        raw = load_config(o.config);
    for (const auto& text : o.overrides) {
        auto [key, value] = parse_assignment(text);
        // A flag in one unit system replaces the file's value in the other.
        if (key.ends_with("_hz"))
            raw.erase(key.substr(0, key.size() - 3));
        else
            raw.erase(key + "_hz");
        raw[key] = value;
    }
    return normalize(raw);
}

// Writes to --out when given, otherwise to the command's stdout.
template <typename Fn>
void emit(const Options& o, std::ostream& out, Fn&& write)
{
    if (o.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::InvalidParameter, "cannot write '" + o.out + "'");
    write(file);
}

void report_line(std::ostream& os, const std::string& key, double value)
{
    os << key << " = " << format_number(value) << '\n';
}

void warn_weak_coupling(const CoolingFigures& f, std::ostream& err)
{
    if (f.flags & kWeakCouplingViolated)
        err << "warning: g^2 max(S_FF(+-w_m)) exceeds 0.1 kappa1; weak-coupling rates may be inaccurate\n";
}

std::vector<double> J_grid(const Options& o)
{
    return o.J_n ? linspace(o.J_lo, o.J_hi, o.J_n) : arange(o.J_lo, o.J_hi, o.J_step);
}

CsvTable spectrum_table(const SystemParams& p, const SpectrumCurve& curve,
                        const std::vector<std::string>& extra)
{
    CsvTable table({"omega", "S_FF"});
    table.add_comments(extra);
    table.add_comments(describe(p));
    table.add_comment("omega_lo = " + format_number(curve.omegas.front()));
    table.add_comment("omega_hi = " + format_number(curve.omegas.back()));
    table.add_comment("n_points = " + std::to_string(curve.omegas.size()));
    table.add_comment("dip_position = " + format_number(curve.landmarks.dip_position));
    table.add_comment("lower_peak = " + format_number(curve.landmarks.lower_peak));
    table.add_comment("upper_peak = " + format_number(curve.landmarks.upper_peak));
    for (std::size_t i = 0; i < curve.omegas.size(); ++i)
        table.add_row({curve.omegas[i], curve.values[i]});
    return table;
}

CsvTable sweep_table(const SystemParams& tmpl, const SweepResult& sweep,
                     const std::vector<std::string>& extra)
{
    CsvTable table({"J", "delta1", "g", "S_plus", "S_minus", "gamma_c", "n_c", "n_f", "flags"});
    table.add_comments(extra);
    table.add_comments(describe(tmpl));
    table.add_comment("protocol = delta2 = -omega_m, delta1 = omega_m - J^2/(2 omega_m)");
    if (sweep.best)
        table.add_comment("best_J = " + format_number(sweep.rows[*sweep.best].J));
    for (const auto& r : sweep.rows) {
        const auto& f = r.figures;
        table.add_row({r.J, r.delta1, r.g, f.s_plus, f.s_minus, f.gamma_c, f.n_limit, f.n_final},
                      describe_row_flags(r.flags));
    }
    return table;
}

int cmd_steady(const Options& o, std::ostream& out)
{
    const auto p = resolve_params(o);
    const auto ss = solve_steady_state(p);
    emit(o, out, [&](std::ostream& os) {
        for (const auto& line : describe(p))
            os << "# " << line << '\n';
        report_line(os, "alpha1_re", ss.alpha1.real());
        report_line(os, "alpha1_im", ss.alpha1.imag());
        report_line(os, "alpha1_abs", std::abs(ss.alpha1));
        report_line(os, "alpha2_re", ss.alpha2.real());
        report_line(os, "alpha2_im", ss.alpha2.imag());
        report_line(os, "alpha2_abs", std::abs(ss.alpha2));
        report_line(os, "beta_re", ss.beta.real());
        report_line(os, "beta_im", ss.beta.imag());
        report_line(os, "g_eff", ss.g_eff);
        report_line(os, "delta1_bare", ss.delta1_bare);
    });
    return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out)
{
    const auto p = resolve_params(o);
    const auto curve = sample_spectrum(p, o.omega_lo, o.omega_hi, o.n_points);
    const auto table = spectrum_table(p, curve, {"eitcool spectrum"});
    emit(o, out, [&](std::ostream& os) { table.write(os); });
    return kExitOk;
}

int cmd_cool(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto p = resolve_params(o);
    const auto ss = solve_steady_state(p);
    const auto f = cooling_figures(p, ss);
    warn_weak_coupling(f, err);
    emit(o, out, [&](std::ostream& os) {
        for (const auto& line : describe(p))
            os << "# " << line << '\n';
        report_line(os, "g", ss.g_eff);
        report_line(os, "S_plus", f.s_plus);
        report_line(os, "S_minus", f.s_minus);
        report_line(os, "gamma_c", f.gamma_c);
        report_line(os, "n_c", f.n_limit);
        report_line(os, "n_f", f.n_final);
        os << "flags = " << describe_flags(f.flags) << '\n';
    });
    return kExitOk;
}

int cmd_evolve(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto p = resolve_params(o);
    const auto ss = solve_steady_state(p);
    const auto f = cooling_figures(p, ss);
    warn_weak_coupling(f, err);
    const double rate = f.gamma_c + p.gamma_m;
    if (!(rate > 0))
        throw Error(ErrorCode::Divergence, "gamma_c + gamma_m <= 0: the phonon number grows without bound");
    const double t_final = o.t_final.value_or(10.0 / rate);
    const double n0 = o.n0.value_or(p.n_thermal);
    if (!(t_final > 0))
        throw Error(ErrorCode::InvalidParameter, "--t-final must be > 0");
    const auto times = linspace(0.0, t_final, std::max<std::size_t>(o.n_points, 2));

    CsvTable table({"t", "mean_phonon"});
    table.add_comment(std::string("eitcool evolve (") + (o.analytic ? "closed-form first moment" : "Fock rate equations") + ")");
    table.add_comments(describe(p));
    table.add_comment("n0 = " + format_number(n0));
    table.add_comment("n_f = " + format_number(f.n_final));
    table.add_comment("relaxation_rate = " + format_number(rate));

    if (o.analytic) {
        for (double t : times)
            table.add_row({t, evolve_mean_phonon(p, ss, n0, t)});
    }
    else {
        table.add_comment("n_max = " + std::to_string(o.n_max));
        const auto trace = trace_rate_equations(p, ss, thermal_distribution(n0, o.n_max), times, o.n_max);
        for (std::size_t i = 0; i < times.size(); ++i)
            table.add_row({times[i], trace[i].mean()});
        if (!o.dist_out.empty()) {
            CsvTable dist({"n", "P_n"});
            dist.add_comment("eitcool evolve final distribution");
            dist.add_comments(describe(p));
            dist.add_comment("t = " + format_number(t_final));
            const auto& probs = trace.back().probs;
            for (std::size_t n = 0; n < probs.size(); ++n)
                dist.add_row({static_cast<double>(n), probs[n]});
            dist.write_file(o.dist_out);
        }
    }
    emit(o, out, [&](std::ostream& os) { table.write(os); });
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const auto p = resolve_params(o);
    const auto sweep = sweep_J(p, J_grid(o), p.g_mode);
    const auto table = sweep_table(p, sweep, {"eitcool sweep"});
    emit(o, out, [&](std::ostream& os) { table.write(os); });
    return kExitOk;
}

int cmd_gridsearch(const Options& o, std::ostream& out)
{
    const auto p = resolve_params(o);
    const auto d1 = linspace(o.delta1_lo, o.delta1_hi, o.delta1_n);
    const auto result = grid_search(p, d1, J_grid(o));

    CsvTable table({"delta1", "J", "g", "S_plus", "S_minus", "gamma_c", "n_c", "n_f", "flags"});
    table.add_comment("eitcool gridsearch");
    table.add_comments(describe(p));
    table.add_comment("analytic_J = " + format_number(result.analytic.coupling_J));
    table.add_comment("analytic_delta1 = " + format_number(result.analytic.delta1_opt));
    table.add_comment("analytic_n_f = " + format_number(result.analytic.predicted.n_final));
    if (result.best) {
        const auto& b = result.rows[*result.best];
        table.add_comment("best_delta1 = " + format_number(b.delta1));
        table.add_comment("best_J = " + format_number(b.J));
        table.add_comment("best_n_f = " + format_number(b.figures.n_final));
    }
    table.add_comment("ratio_analytic_over_best = " + format_number(result.ratio));
    for (const auto& r : result.rows) {
        const auto& f = r.figures;
        table.add_row({r.delta1, r.J, r.g, f.s_plus, f.s_minus, f.gamma_c, f.n_limit, f.n_final},
                      describe_row_flags(r.flags));
    }
    emit(o, out, [&](std::ostream& os) { table.write(os); });
    return kExitOk;
}

// Parameter sets of the four reproduced figures. Where the captions do not
// pin a curve family, the chosen values are written into each file header.
int cmd_figure(const Options& o, const CLI::App& sub, std::ostream& out)
{
    namespace fs = std::filesystem;
    const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
    fs::create_directories(dir);
    auto given = [&](const char* flag) { return sub.count(flag) > 0; };
    std::vector<std::string> written;

    auto write = [&](const CsvTable& table, const std::string& name) {
        const auto path = (dir / name).string();
        table.write_file(path);
        written.push_back(path);
    };

    SystemParams base;
    base.kappa1 = 3.0;
    base.kappa2 = 0.1;
    base.delta2 = -1.0;

    switch (o.figure_id) {
    case 2: {
        base.delta1 = 1.0;
        const double lo = given("--omega-lo") ? o.omega_lo : -4.0;
        const double hi = given("--omega-hi") ? o.omega_hi : 4.0;
        const std::size_t n = given("--n-points") ? o.n_points : 801;
        for (double J : {0.5, 1.0, 1.5, 2.0}) {
            SystemParams p = base;
            p.coupling_J = J;
            const auto curve = sample_spectrum(p, lo, hi, n);
            write(spectrum_table(p, curve, {"eitcool figure 2", "varied = J", "value = " + format_number(J)}),
                  "fig2_J_" + format_number(J) + ".csv");
        }
        break;
    }
    case 3: {
        base.delta1 = -3.0;
        base.coupling_J = 2.0 * std::numbers::sqrt2;
        const double lo = given("--omega-lo") ? o.omega_lo : -7.0;
        const double hi = given("--omega-hi") ? o.omega_hi : 3.0;
        const std::size_t n = given("--n-points") ? o.n_points : 1001;
        for (double k2 : {0.05, 0.1, 0.2, 0.4}) {
            SystemParams p = base;
            p.kappa2 = k2;
            const auto curve = sample_spectrum(p, lo, hi, n);
            write(spectrum_table(p, curve, {"eitcool figure 3", "varied = kappa2", "value = " + format_number(k2)}),
                  "fig3_kappa2_" + format_number(k2) + ".csv");
        }
        break;
    }
    case 4: {
        base.g_mode = CouplingMode::Fixed;
        base.g_fixed = 0.2;
        const auto grid = J_grid(o);
        for (double k2 : {0.05, 0.1, 0.2, 0.3}) {
            SystemParams p = base;
            p.kappa2 = k2;
            const auto sweep = sweep_J(p, grid, CouplingMode::Fixed);
            write(sweep_table(p, sweep, {"eitcool figure 4", "varied = kappa2", "value = " + format_number(k2)}),
                  "fig4_kappa2_" + format_number(k2) + ".csv");
        }
        break;
    }
    case 5: {
        SystemParams p;  // the experimentally motivated operating point
        const auto sweep = sweep_J(p, J_grid(o), CouplingMode::FromDrive);
        CsvTable table({"J", "n_f", "n_c"});
        table.add_comment("eitcool figure 5");
        table.add_comments(describe(p));
        table.add_comment("protocol = delta2 = -omega_m, delta1 = omega_m - J^2/(2 omega_m), g = g0 |alpha1|");
        if (sweep.best)
            table.add_comment("best_J = " + format_number(sweep.rows[*sweep.best].J));
        for (const auto& r : sweep.rows)
            table.add_row({r.J, r.figures.n_final, r.figures.n_limit});
        write(table, "fig5.csv");
        break;
    }
    default:
        throw Error(ErrorCode::InvalidParameter,
                    "--id must be one of 2, 3, 4, 5 (got " + std::to_string(o.figure_id) + ")");
    }

    for (const auto& path : written)
        out << path << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Double-cavity optomechanical cooling toolkit"};
    app.require_subcommand(1, 1);

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "key = value parameter file");
        sub->add_option("--set", o.overrides, "parameter override key=value (repeatable)");
        sub->add_option("--out", o.out, "output path (figure: output directory)");
    };
    auto add_J_grid = [&](CLI::App* sub) {
        sub->add_option("--J-lo", o.J_lo);
        sub->add_option("--J-hi", o.J_hi);
        sub->add_option("--J-step", o.J_step);
        sub->add_option("--J-n", o.J_n, "number of J points (overrides --J-step)");
    };
    auto add_omega_grid = [&](CLI::App* sub) {
        sub->add_option("--omega-lo", o.omega_lo);
        sub->add_option("--omega-hi", o.omega_hi);
        sub->add_option("--n-points", o.n_points);
    };

    auto* steady = app.add_subcommand("steady", "classical steady state and enhanced coupling");
    add_params(steady);

    auto* spectrum = app.add_subcommand("spectrum", "sample the force fluctuation spectrum");
    add_params(spectrum);
    add_omega_grid(spectrum);

    auto* cool = app.add_subcommand("cool", "cooling rate, cooling limit and final phonon number");
    add_params(cool);

    auto* evolve = app.add_subcommand("evolve", "mean phonon number trajectory");
    add_params(evolve);
    evolve->add_option("--n-max", o.n_max, "Fock truncation level");
    evolve->add_option("--t-final", o.t_final, "end time in 1/omega_m (default 10/(gamma_c+gamma_m))");
    evolve->add_option("--n-points", o.n_points, "number of output times");
    evolve->add_option("--n0", o.n0, "initial thermal mean (default n_thermal)");
    evolve->add_flag("--analytic", o.analytic, "closed-form first moment instead of the Fock ladder");
    evolve->add_option("--dist-out", o.dist_out, "write the final distribution as n,P_n");

    auto* sweep = app.add_subcommand("sweep", "sweep J along the optimal-condition curve");
    add_params(sweep);
    add_J_grid(sweep);

    auto* grid = app.add_subcommand("gridsearch", "brute-force (delta1, J) search of n_f");
    add_params(grid);
    add_J_grid(grid);
    grid->add_option("--delta1-lo", o.delta1_lo);
    grid->add_option("--delta1-hi", o.delta1_hi);
    grid->add_option("--delta1-n", o.delta1_n);

    auto* figure = app.add_subcommand("figure", "write the CSV datasets of figures 2-5");
    figure->add_option("--id", o.figure_id, "figure number (2, 3, 4 or 5)")->required();
    figure->add_option("--out", o.out, "output directory");
    add_omega_grid(figure);
    add_J_grid(figure);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (steady->parsed())
            return cmd_steady(o, out);
        if (spectrum->parsed())
            return cmd_spectrum(o, out);
        if (cool->parsed())
            return cmd_cool(o, out, err);
        if (evolve->parsed()) {
            if (evolve->count("--n-points") == 0)
                o.n_points = 101;
            return cmd_evolve(o, out, err);
        }
        if (sweep->parsed())
            return cmd_sweep(o, out);
        if (grid->parsed())
            return cmd_gridsearch(o, out);
        if (figure->parsed())
            return cmd_figure(o, *figure, out);
    }
    catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return is_validation_error(e.code()) ? kExitValidation : kExitNumerical;
    }
    catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace eitcool::cli
