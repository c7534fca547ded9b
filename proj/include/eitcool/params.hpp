#pragma once

#include <map>
#include <optional>
#include <string>

namespace eitcool {

enum class CouplingMode {
    FromDrive,  // g = g0 |alpha1|
    Fixed,      // g taken from SystemParams::g_fixed
};

// Parameters of the double-cavity optomechanical system. Every frequency and
// rate is expressed in units of the mechanical frequency, so omega_m stays 1
// unless a caller deliberately rescales. delta1 is the *effective* detuning of
// cavity 1, i.e. already shifted by the static mechanical displacement.
//
// Defaults are the operating point used for the headline cooling result.
struct SystemParams {
    double omega_m = 1.0;
    double kappa1 = 3.0;
    double kappa2 = 0.1;
    double delta1 = -0.28;
    double delta2 = -1.0;
    double coupling_J = 1.6;
    double g0 = 1.2e-4;
    double drive_eps = 6000.0;
    double gamma_m = 1.25e-5;
    double n_thermal = 312.0;
    CouplingMode g_mode = CouplingMode::FromDrive;
    double g_fixed = 0.0;

    // Throws Error(InvalidParameter) naming the offending field.
    void validate() const;

    bool operator==(const SystemParams&) const = default;
};

// Laboratory description of the mechanical mode.
struct SIEnvironment {
    double omega_m_hz;     // angular frequency, rad/s
    double temperature_K;
    double quality_Q;

    void validate() const;
};

// Bose-Einstein occupation 1/(exp(hbar w / kB T) - 1).
double bose_occupation(double omega_hz, double temperature_K);

double thermal_occupation(const SIEnvironment& env);

// Parameter values keyed by their config-file names. Keys carrying the `_hz`
// suffix are angular frequencies in rad/s; `temperature_K` is in kelvin;
// everything else is in units of omega_m (or dimensionless).
using RawParams = std::map<std::string, double>;

// Converts raw keyed values to omega_m units, overlaying them on `base`.
// Rejects unknown keys, a key given both with and without `_hz`, `_hz` keys
// without `omega_m_hz`, both `gamma_m` and `quality_Q`, and n_thermal that
// disagrees with temperature_K by more than 1 %.
SystemParams normalize(const RawParams& raw, const SystemParams& base = {});

// Inverse of normalize for a given mechanical frequency: every rate is
// emitted with the `_hz` suffix, together with omega_m_hz and n_thermal.
RawParams denormalize(const SystemParams& p, double omega_m_hz);

// The SI environment described by `raw`, if it names omega_m_hz,
// temperature_K and quality_Q.
std::optional<SIEnvironment> environment_of(const RawParams& raw);

bool is_known_key(const std::string& key);

}  // namespace eitcool
