#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eitcool/params.hpp"
#include "eitcool/steady_state.hpp"

namespace eitcool {

// Phonon-number populations P_0 .. P_nmax.
struct FockDistribution {
    std::vector<double> probs;

    std::size_t n_max() const { return probs.empty() ? 0 : probs.size() - 1; }
    double total() const;
    // First moment normalized by total().
    double mean() const;
    double tail() const { return probs.empty() ? 0.0 : probs.back(); }
};

// Geometric (thermal) distribution with the given mean, truncated at n_max
// and renormalized.
FockDistribution thermal_distribution(double mean, std::size_t n_max);

// Per-(n+1) transition rates of the phonon ladder: the chain moves
// n -> n+1 at (n+1) up and n+1 -> n at (n+1) down, where
//   up   = g^2 S_FF(-w_m) + gamma_m n_m,
//   down = g^2 S_FF(+w_m) + gamma_m (n_m + 1).
struct LadderRates {
    double optical_up = 0.0;
    double optical_down = 0.0;
    double thermal_up = 0.0;
    double thermal_down = 0.0;

    double up() const { return optical_up + thermal_up; }
    double down() const { return optical_down + thermal_down; }
};

LadderRates ladder_rates(const SystemParams& p, const SteadyState& ss);

// Tridiagonal generator dP/dt = G P truncated at n_max. Probability flowing
// from n_max to n_max + 1 leaves the truncated space, so the last column sum
// is negative while the others vanish.
struct TridiagonalGenerator {
    std::vector<double> sub;    // G(n, n-1), index n = 1..n_max stored at n-1
    std::vector<double> diag;   // G(n, n)
    std::vector<double> super;  // G(n, n+1), index n = 0..n_max-1

    std::size_t size() const { return diag.size(); }
    void apply(std::span<const double> x, std::span<double> dxdt) const;
};

TridiagonalGenerator build_generator(const LadderRates& rates, std::size_t n_max);

struct RateEquationOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-10;
    double max_tail = 1e-6;           // TruncationTooSmall threshold
    double max_initial_tail = 1e-8;   // precondition on the initial state
};

// Integrates the phonon rate equations from t = 0 to t_final with an
// adaptive Dormand-Prince scheme. `initial` is zero-padded to n_max + 1
// levels. Throws Error(TruncationTooSmall) when P_nmax exceeds
// options.max_tail at any accepted step, Error(Divergence) when the mean
// passes n_max / 2 or the chain is heating-dominated and hits the boundary.
FockDistribution integrate_rate_equations(const SystemParams& p, const SteadyState& ss,
                                          const FockDistribution& initial, double t_final,
                                          std::size_t n_max,
                                          const RateEquationOptions& options = {});

// As integrate_rate_equations, returning the distribution at each of the
// non-decreasing checkpoint times.
std::vector<FockDistribution> trace_rate_equations(const SystemParams& p, const SteadyState& ss,
                                                   const FockDistribution& initial,
                                                   std::span<const double> times,
                                                   std::size_t n_max,
                                                   const RateEquationOptions& options = {});

}  // namespace eitcool
