#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "eitcool/error.hpp"
#include "eitcool/spectrum.hpp"

using namespace eitcool;

namespace {

SystemParams headline()
{
    return SystemParams{};  // kappa1=3, kappa2=0.1, delta1=-0.28, delta2=-1, J=1.6
}

SystemParams fig2(double J)
{
    SystemParams p;
    p.kappa1 = 3.0;
    p.kappa2 = 0.1;
    p.delta1 = 1.0;
    p.delta2 = -1.0;
    p.coupling_J = J;
    return p;
}

// Independent route: the force spectrum of the linear Langevin system
// da/dt = -M a + noise is 2 Re[(M - i w)^{-1}]_{11}, with
// M = [[kappa1 + i delta1, i J], [i J, kappa2 + i delta2]]. Invert the 2x2
// matrix by cofactors instead of going through A(w).
double langevin_spectrum(double w, const SystemParams& p)
{
    using C = std::complex<double>;
    const C m11(p.kappa1, p.delta1 - w);
    const C m22(p.kappa2, p.delta2 - w);
    const C m12(0.0, p.coupling_J);
    const C det = m11 * m22 - m12 * m12;
    return 2.0 * (m22 / det).real();
}

std::vector<std::size_t> local_maxima(const std::vector<double>& v)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] > v[i - 1] && v[i] > v[i + 1])
            idx.push_back(i);
    return idx;
}

std::vector<std::size_t> local_minima(const std::vector<double>& v)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] < v[i - 1] && v[i] < v[i + 1])
            idx.push_back(i);
    return idx;
}

}  // namespace

TEST_CASE("response function at the headline point")
{
    const auto p = headline();
    const auto a_plus = response_A(1.0, p);
    CHECK(a_plus.real() == doctest::Approx(3.06384039900249377).epsilon(1e-13));
    CHECK(a_plus.imag() == doctest::Approx(-0.00319201995012468828).epsilon(1e-10));
    const auto a_minus = response_A(-1.0, p);
    CHECK(a_minus.real() == doctest::Approx(28.6).epsilon(1e-13));
    CHECK(a_minus.imag() == doctest::Approx(0.72).epsilon(1e-13));

    auto single = p;
    single.coupling_J = 0.0;
    CHECK(response_A(single.delta1, single) == std::complex<double>(single.kappa1, 0.0));
}

TEST_CASE("spectrum values")
{
    const auto p = headline();
    CHECK(eval_S_FF(1.0, p) == doctest::Approx(0.652774808311822121).epsilon(1e-13));
    CHECK(eval_S_FF(-1.0, p) == doctest::Approx(0.0698857782929885505).epsilon(1e-13));
    CHECK(eval_S_FF(-1.0, fig2(1.0)) == doctest::Approx(0.150289017341040462).epsilon(1e-13));

    auto lorentz = p;
    lorentz.coupling_J = 0.0;
    CHECK(eval_S_FF(lorentz.delta1, lorentz) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("closed form matches the Langevin transfer function")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        SystemParams p;
        p.kappa1 = 0.05 + 5 * u(rng);
        p.kappa2 = 2 * u(rng);
        p.delta1 = -5 + 10 * u(rng);
        p.delta2 = -5 + 10 * u(rng);
        p.coupling_J = 4 * u(rng);
        const double w = -10 + 20 * u(rng);
        const double s = eval_S_FF(w, p);
        CHECK(s == doctest::Approx(langevin_spectrum(w, p)).epsilon(1e-10));
        CHECK(s > 0.0);
        CHECK(response_A(w, p).real() >= p.kappa1);
        CHECK(s == doctest::Approx(2.0 * (1.0 / response_A(w, p)).real()).epsilon(1e-12));
    }
}

TEST_CASE("vanishing coupling recovers the Lorentzian")
{
    auto p = fig2(1e-6);
    double worst = 0.0;
    for (double w = -20.0; w <= 20.0; w += 1e-3) {
        const double lorentz = 2 * p.kappa1 / (p.kappa1 * p.kappa1 + (w - p.delta1) * (w - p.delta1));
        worst = std::max(worst, std::abs(eval_S_FF(w, p) - lorentz));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("lossless second cavity: pole of A, zero of S_FF")
{
    auto p = fig2(1.0);
    p.kappa2 = 0.0;
    try {
        response_A(p.delta2, p);
        FAIL("expected PoleAtDip");
    }
    catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleAtDip);
    }
    CHECK(eval_S_FF(p.delta2, p) == 0.0);
    CHECK(eval_S_FF(p.delta2 + 1e-6, p) < 1e-9);
    CHECK(eval_S_FF(p.delta2 + 1e-6, p) > 0.0);
}

TEST_CASE("normal modes")
{
    SUBCASE("figure 3 optimum puts the upper mode at +w_m")
    {
        SystemParams p;
        p.delta1 = -3.0;
        p.delta2 = -1.0;
        p.coupling_J = 2.0 * std::numbers::sqrt2;
        const auto m = normal_modes(p);
        CHECK(m.delta_prime_1 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m.delta_prime_2 == doctest::Approx(-5.0).epsilon(1e-14));
    }
    SUBCASE("uncoupled")
    {
        SystemParams p;
        p.coupling_J = 0.0;
        p.delta1 = -0.3;
        p.delta2 = 0.7;
        const auto m = normal_modes(p);
        CHECK(m.delta_prime_1 == doctest::Approx(0.7).epsilon(1e-15));
        CHECK(m.delta_prime_2 == doctest::Approx(-0.3).epsilon(1e-15));
        CHECK(m.mixing_theta == 0.0);
    }
    SUBCASE("degenerate detunings")
    {
        SystemParams p;
        p.delta1 = 0.0;
        p.delta2 = 0.0;
        p.coupling_J = 1.0;
        const auto m = normal_modes(p);
        CHECK(m.delta_prime_1 == 1.0);
        CHECK(m.delta_prime_2 == -1.0);
        CHECK(m.mixing_theta == doctest::Approx(std::numbers::pi / 4));
    }
}

TEST_CASE("normal modes are the eigenvalues of the optical Hamiltonian")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        SystemParams p;
        p.delta1 = u(rng);
        p.delta2 = u(rng);
        p.coupling_J = std::abs(u(rng));
        const auto m = normal_modes(p);
        const double scale = 1.0 + std::abs(p.delta1) + std::abs(p.delta2) + p.coupling_J;
        CHECK(m.delta_prime_1 >= m.delta_prime_2);
        CHECK(std::abs(m.delta_prime_1 + m.delta_prime_2 - (p.delta1 + p.delta2)) < 1e-12 * scale);
        CHECK(std::abs(m.delta_prime_1 * m.delta_prime_2 -
                       (p.delta1 * p.delta2 - p.coupling_J * p.coupling_J)) < 1e-12 * scale * scale);
        if (p.delta1 != p.delta2)
            CHECK(std::tan(2 * m.mixing_theta) ==
                  doctest::Approx(2 * p.coupling_J / (p.delta1 - p.delta2)).epsilon(1e-9));
    }
}

TEST_CASE("sampled spectra")
{
    SUBCASE("coupled cavities: two peaks around a dip")
    {
        for (double J : {0.5, 1.0, 1.5, 2.0}) {
            const auto c = sample_spectrum(fig2(J), -4.0, 4.0, 801);
            CHECK(local_maxima(c.values).size() == 2);
            CHECK(local_minima(c.values).size() == 1);
            CHECK(c.landmarks.dip_position == -1.0);
            CHECK(c.landmarks.upper_peak > c.landmarks.lower_peak);
        }
    }
    SUBCASE("single cavity: one Lorentzian peak at delta1")
    {
        const auto c = sample_spectrum(fig2(0.0), -4.0, 4.0, 801);
        const auto peaks = local_maxima(c.values);
        REQUIRE(peaks.size() == 1);
        CHECK(std::abs(c.omegas[peaks[0]] - 1.0) <= 0.01 + 1e-12);
    }
    SUBCASE("grid shape")
    {
        const auto c = sample_spectrum(fig2(1.0), -1.0, 1.0, 5);
        CHECK(c.omegas == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
        CHECK(std::is_sorted(c.omegas.begin(), c.omegas.end()));
        CHECK_THROWS_AS(sample_spectrum(fig2(1.0), 1.0, -1.0, 5), Error);
        CHECK_THROWS_AS(sample_spectrum(fig2(1.0), -1.0, 1.0, 1), Error);
    }
}

TEST_CASE("EIT dip deepens as the second cavity gets better")
{
    // Figure 3 family; oracle is the dip value written out by hand:
    // S(delta2) = 2 (k1 + J^2/k2) / ((k1 + J^2/k2)^2 + (delta2 - delta1)^2).
    SystemParams p;
    p.delta1 = -3.0;
    p.delta2 = -1.0;
    p.coupling_J = 2.0 * std::numbers::sqrt2;
    double prev = 0.0;
    for (double k2 : {0.05, 0.1, 0.2, 0.4}) {
        p.kappa2 = k2;
        const double re = p.kappa1 + p.coupling_J * p.coupling_J / k2;
        const double expected = 2 * re / (re * re + 4.0);
        const double dip = eval_S_FF(p.delta2, p);
        CHECK(dip == doctest::Approx(expected).epsilon(1e-13));
        CHECK(dip > prev);
        prev = dip;
    }
}

TEST_CASE("dip minimum sits next to delta2")
{
    // The exact minimum is displaced from delta2 by about
    // kappa2 (delta1 - delta2) / kappa1, so the bound carries that offset
    // on top of the grid resolution.
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        SystemParams p;
        p.kappa1 = 0.5 + 4.5 * u(rng);
        p.coupling_J = (0.05 + 0.95 * u(rng)) * p.kappa1;
        p.kappa2 = (0.001 + 0.099 * u(rng)) * p.coupling_J;
        p.delta2 = -3 + 6 * u(rng);
        p.delta1 = p.delta2 + (-1 + 2 * u(rng)) * p.kappa1;
        const double offset = p.kappa2 * std::abs(p.delta1 - p.delta2) / p.kappa1;
        const double half = 10 * (p.kappa2 + offset);
        const auto c = sample_spectrum(p, p.delta2 - half, p.delta2 + half, 4001);
        const double h = c.omegas[1] - c.omegas[0];
        const auto it = std::min_element(c.values.begin(), c.values.end());
        const auto i_min = static_cast<std::size_t>(it - c.values.begin());
        REQUIRE(i_min > 0);
        REQUIRE(i_min + 1 < c.values.size());
        CHECK(std::abs(c.omegas[i_min] - p.delta2) <= 1.5 * offset + h);
    }
}

TEST_CASE("spectral peaks follow the normal modes for strong inter-cavity coupling")
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        SystemParams p;
        p.kappa1 = 0.2 + 3 * u(rng);
        p.kappa2 = 0.01 + 0.5 * u(rng);
        p.coupling_J = p.kappa1 * (1 + 2 * u(rng));
        p.delta1 = -3 + 6 * u(rng);
        p.delta2 = -3 + 6 * u(rng);
        const auto m = normal_modes(p);
        const double lo = m.delta_prime_2 - 3 * p.kappa1;
        const double hi = m.delta_prime_1 + 3 * p.kappa1;
        const auto c = sample_spectrum(p, lo, hi, 8001);
        const double tol = 0.5 * (p.kappa1 + p.kappa2) + (c.omegas[1] - c.omegas[0]);
        for (auto k : local_maxima(c.values)) {
            const double w = c.omegas[k];
            const double d = std::min(std::abs(w - m.delta_prime_1), std::abs(w - m.delta_prime_2));
            CHECK(d <= tol);
        }
    }
}
