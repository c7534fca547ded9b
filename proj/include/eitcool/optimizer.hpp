#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eitcool/cooling.hpp"
#include "eitcool/params.hpp"

namespace eitcool {

// Coupling that puts the upper normal mode at +w_m when delta2 = -w_m:
//   J = sqrt(2 w_m (w_m - delta1)).
// Throws Error(UnsupportedRegime) for delta1 > w_m; delta1 = w_m gives 0.
double optimal_J_for_delta1(double delta1, double omega_m = 1.0);

// Inverse of optimal_J_for_delta1: delta1 = w_m - J^2 / (2 w_m).
double delta1_for_optimal_J(double J, double omega_m = 1.0);

// `tmpl` with delta2 = -w_m and delta1 tuned to its coupling_J.
SystemParams at_optimal_conditions(const SystemParams& tmpl);

struct OptimalPoint {
    double delta2_opt = -1.0;
    double coupling_J = 0.0;
    double delta1_opt = 0.0;
    double g = 0.0;
    CoolingFigures predicted;
};

OptimalPoint optimal_point(const SystemParams& tmpl);

enum RowFlag : unsigned {
    kRowOk = 0,
    kRowHeating = 1u << 0,
    kRowWeakCoupling = 1u << 1,
    kRowDegenerate = 1u << 2,
    kRowUnsupported = 1u << 3,
    kRowSingular = 1u << 4,  // steady state undefined (zero denominator)
};

std::string describe_row_flags(unsigned flags);

struct SweepRow {
    double J = 0.0;
    double delta1 = 0.0;
    double g = 0.0;
    CoolingFigures figures;
    unsigned flags = kRowOk;

    // Eligible for the optimum: a finite cooling steady state exists.
    bool valid() const;
};

struct SweepResult {
    std::string axis;
    std::vector<double> grid;
    std::vector<SweepRow> rows;
    std::optional<std::size_t> best;  // minimal n_final among valid rows
};

// Evaluates one (delta1, J) point with delta2 taken from `tmpl`. Failures
// become flags, never exceptions.
SweepRow evaluate_point(const SystemParams& tmpl, double delta1, double J);

// Sweeps J along the optimal-condition curve (delta2 = -w_m, delta1 from J).
// Mode Fixed uses tmpl.g_fixed for every row; FromDrive recomputes g.
SweepResult sweep_J(const SystemParams& tmpl, std::span<const double> J_grid, CouplingMode mode);

struct GridSearchResult {
    std::vector<double> delta1_grid;
    std::vector<double> J_grid;
    std::vector<SweepRow> rows;  // row-major: delta1 outer, J inner
    std::optional<std::size_t> best;
    OptimalPoint analytic;       // at tmpl.coupling_J
    double ratio = 0.0;          // analytic n_f / best n_f, NaN without a best row

    const SweepRow& at(std::size_t i_delta1, std::size_t i_J) const {
        return rows[i_delta1 * J_grid.size() + i_J];
    }
};

// Brute-force search of n_final over (delta1, J) with delta2 = -w_m. Rows
// with delta1 > w_m are flagged kRowUnsupported and excluded from the best.
GridSearchResult grid_search(const SystemParams& tmpl, std::span<const double> delta1_grid,
                             std::span<const double> J_grid);

// lo, lo + step, ... up to hi (inclusive up to rounding).
std::vector<double> arange(double lo, double hi, double step);
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace eitcool
