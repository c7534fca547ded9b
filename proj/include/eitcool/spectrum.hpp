#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "eitcool/params.hpp"

namespace eitcool {

// Inverse response of cavity 1 dressed by cavity 2:
//   A(w) = kappa1 - i (w - delta1) + J^2 / (kappa2 - i (w - delta2)).
// Re A >= kappa1. Throws Error(PoleAtDip) at w = delta2 when kappa2 = 0, J > 0.
std::complex<double> response_A(double omega, const SystemParams& p);

// Fluctuation spectrum of the force F = a1^dag + a1:
//   S_FF(w) = 1/A + 1/A* = 2 Re A / |A|^2.
// At the kappa2 = 0 pole the limiting value 0 is returned.
double eval_S_FF(double omega, const SystemParams& p);

// Eigen-detunings of the coupled optical modes. delta_prime_1 is the upper
// one; mixing_theta satisfies tan(2 theta) = 2J / (delta1 - delta2) on the
// principal branch, with theta = pi/4 when the bare detunings coincide.
struct NormalModes {
    double delta_prime_1 = 0.0;
    double delta_prime_2 = 0.0;
    double mixing_theta = 0.0;
};

NormalModes normal_modes(const SystemParams& p);

struct SpectrumLandmarks {
    double dip_position = 0.0;  // delta2
    double lower_peak = 0.0;    // delta'_2
    double upper_peak = 0.0;    // delta'_1
};

struct SpectrumCurve {
    std::vector<double> omegas;
    std::vector<double> values;
    SpectrumLandmarks landmarks;
};

// Uniform sampling of S_FF on [lo, hi] with n_points >= 2 samples, both
// endpoints included.
SpectrumCurve sample_spectrum(const SystemParams& p, double lo, double hi, std::size_t n_points);

}  // namespace eitcool
