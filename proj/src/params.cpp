#include "eitcool/params.hpp"

#include <array>
#include <cmath>
#include <string_view>

#include "eitcool/error.hpp"

namespace eitcool {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::UnitConflict: return "UnitConflict";
    case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleAtDip: return "PoleAtDip";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::Divergence: return "Divergence";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidParameter:
    case ErrorCode::UnknownKey:
    case ErrorCode::UnitConflict:
    case ErrorCode::UnsupportedRegime:
        return true;
    default:
        return false;
    }
}

namespace {

// CODATA 2018 exact values.
constexpr double kHbar = 1.054571817e-34;
constexpr double kBoltzmann = 1.380649e-23;

void require(bool ok, const char* field, const char* rule)
{
    if (!ok)
        throw Error(ErrorCode::InvalidParameter, std::string(field) + " must be " + rule);
}

// Keys that take a frequency/rate, i.e. accept the `_hz` variant.
constexpr std::array<std::string_view, 9> kRateKeys = {
    "kappa1", "kappa2", "delta1", "delta2", "J", "g0", "eps", "gamma_m", "g_fixed",
};

bool is_rate_key(std::string_view key)
{
    for (auto k : kRateKeys)
        if (k == key)
            return true;
    return false;
}

double* field_for(SystemParams& p, std::string_view key)
{
    if (key == "kappa1") return &p.kappa1;
    if (key == "kappa2") return &p.kappa2;
    if (key == "delta1") return &p.delta1;
    if (key == "delta2") return &p.delta2;
    if (key == "J") return &p.coupling_J;
    if (key == "g0") return &p.g0;
    if (key == "eps") return &p.drive_eps;
    if (key == "gamma_m") return &p.gamma_m;
    if (key == "g_fixed") return &p.g_fixed;
    return nullptr;
}

std::optional<double> lookup(const RawParams& raw, const std::string& key)
{
    auto it = raw.find(key);
    if (it == raw.end())
        return std::nullopt;
    return it->second;
}

}  // namespace

void SystemParams::validate() const
{
    const std::array<std::pair<const char*, double>, 11> finite_fields = {{
        {"omega_m", omega_m}, {"kappa1", kappa1}, {"kappa2", kappa2}, {"delta1", delta1},
        {"delta2", delta2}, {"J", coupling_J}, {"g0", g0}, {"eps", drive_eps},
        {"gamma_m", gamma_m}, {"n_thermal", n_thermal}, {"g_fixed", g_fixed},
    }};
    for (const auto& [name, value] : finite_fields)
        require(std::isfinite(value), name, "finite");
    require(omega_m > 0, "omega_m", "> 0");
    require(kappa1 > 0, "kappa1", "> 0");
    require(kappa2 >= 0, "kappa2", ">= 0");
    require(gamma_m >= 0, "gamma_m", ">= 0");
    require(coupling_J >= 0, "J", ">= 0");
    require(g0 >= 0, "g0", ">= 0");
    require(drive_eps >= 0, "eps", ">= 0");
    require(n_thermal >= 0, "n_thermal", ">= 0");
    require(g_fixed >= 0, "g_fixed", ">= 0");
}

void SIEnvironment::validate() const
{
    require(std::isfinite(omega_m_hz) && omega_m_hz > 0, "omega_m_hz", "finite and > 0");
    require(std::isfinite(temperature_K) && temperature_K > 0, "temperature_K", "finite and > 0");
    require(std::isfinite(quality_Q) && quality_Q > 0, "quality_Q", "finite and > 0");
}

double bose_occupation(double omega_hz, double temperature_K)
{
    require(std::isfinite(omega_hz) && omega_hz > 0, "omega_m_hz", "finite and > 0");
    require(std::isfinite(temperature_K) && temperature_K > 0, "temperature_K", "finite and > 0");
    const double x = kHbar * omega_hz / (kBoltzmann * temperature_K);
    // expm1 keeps full precision in the classical limit x -> 0; for very
    // large x the occupation underflows to 0 as it should.
    return 1.0 / std::expm1(x);
}

double thermal_occupation(const SIEnvironment& env)
{
    env.validate();
    return bose_occupation(env.omega_m_hz, env.temperature_K);
}

bool is_known_key(const std::string& key)
{
    if (key == "omega_m_hz" || key == "temperature_K" || key == "quality_Q" || key == "n_thermal")
        return true;
    if (is_rate_key(key))
        return true;
    constexpr std::string_view suffix = "_hz";
    if (key.size() > suffix.size() && key.ends_with(suffix))
        return is_rate_key(std::string_view(key).substr(0, key.size() - suffix.size()));
    return false;
}

SystemParams normalize(const RawParams& raw, const SystemParams& base)
{
    for (const auto& [key, value] : raw) {
        if (!is_known_key(key))
            throw Error(ErrorCode::UnknownKey, "unknown parameter key '" + key + "'");
        if (!std::isfinite(value))
            throw Error(ErrorCode::InvalidParameter, "value of '" + key + "' is not finite");
    }

    SystemParams p = base;
    const auto omega_hz = lookup(raw, "omega_m_hz");
    if (omega_hz && !(*omega_hz > 0))
        throw Error(ErrorCode::InvalidParameter, "omega_m_hz must be > 0");

    for (auto key_view : kRateKeys) {
        const std::string key(key_view);
        const auto plain = lookup(raw, key);
        const auto hz = lookup(raw, key + "_hz");
        if (plain && hz)
            throw Error(ErrorCode::UnitConflict,
                        "'" + key + "' given both in omega_m units and as '" + key + "_hz'");
        if (hz && !omega_hz)
            throw Error(ErrorCode::UnitConflict, "'" + key + "_hz' requires omega_m_hz");
        if (!plain && !hz)
            continue;
        *field_for(p, key) = plain ? *plain : *hz / *omega_hz * p.omega_m;
    }

    const bool has_gamma = raw.contains("gamma_m") || raw.contains("gamma_m_hz");
    if (const auto q = lookup(raw, "quality_Q")) {
        if (has_gamma)
            throw Error(ErrorCode::UnitConflict, "'quality_Q' conflicts with an explicit 'gamma_m'");
        if (!(*q > 0))
            throw Error(ErrorCode::InvalidParameter, "quality_Q must be > 0");
        p.gamma_m = p.omega_m / *q;
    }

    const auto temperature = lookup(raw, "temperature_K");
    const auto n_direct = lookup(raw, "n_thermal");
    if (temperature && !omega_hz)
        throw Error(ErrorCode::UnitConflict, "'temperature_K' requires omega_m_hz");
    if (temperature) {
        const double n_from_T = bose_occupation(*omega_hz, *temperature);
        if (n_direct && std::abs(*n_direct - n_from_T) > 0.01 * n_from_T)
            throw Error(ErrorCode::UnitConflict,
                        "'n_thermal' disagrees with 'temperature_K' by more than 1%");
        p.n_thermal = n_direct ? *n_direct : n_from_T;
    }
    else if (n_direct) {
        p.n_thermal = *n_direct;
    }

    if (raw.contains("g_fixed") || raw.contains("g_fixed_hz"))
        p.g_mode = CouplingMode::Fixed;

    p.validate();
    return p;
}

RawParams denormalize(const SystemParams& p, double omega_m_hz)
{
    RawParams raw;
    const double scale = omega_m_hz / p.omega_m;
    raw["omega_m_hz"] = omega_m_hz;
    raw["kappa1_hz"] = p.kappa1 * scale;
    raw["kappa2_hz"] = p.kappa2 * scale;
    raw["delta1_hz"] = p.delta1 * scale;
    raw["delta2_hz"] = p.delta2 * scale;
    raw["J_hz"] = p.coupling_J * scale;
    raw["g0_hz"] = p.g0 * scale;
    raw["eps_hz"] = p.drive_eps * scale;
    raw["gamma_m_hz"] = p.gamma_m * scale;
    raw["n_thermal"] = p.n_thermal;
    if (p.g_mode == CouplingMode::Fixed)
        raw["g_fixed_hz"] = p.g_fixed * scale;
    return raw;
}

std::optional<SIEnvironment> environment_of(const RawParams& raw)
{
    const auto omega_hz = lookup(raw, "omega_m_hz");
    const auto temperature = lookup(raw, "temperature_K");
    const auto q = lookup(raw, "quality_Q");
    if (!omega_hz || !temperature || !q)
        return std::nullopt;
    SIEnvironment env{*omega_hz, *temperature, *q};
    env.validate();
    return env;
}

}  // namespace eitcool
