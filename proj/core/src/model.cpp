#include "omchain/model.hpp"

#include <cmath>
#include <numbers>

namespace omchain
{
namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;

// SI defining constants.
constexpr double hbar_si = 1.054571817e-34;  // J*s
constexpr double k_boltzmann_si = 1.380649e-23;  // J/K

void require(bool ok, const std::string &message)
{
    if (!ok)
    {
        throw ConfigError(message);
    }
}

void validate_mode(const ModeSpec &mode, const std::string &name)
{
    require(std::isfinite(mode.freq_hz) && mode.freq_hz > 0.0,
            "modes." + name + ".freq_hz must be positive");
    require(std::isfinite(mode.gamma_hz) && mode.gamma_hz >= 0.0,
            "modes." + name + ".gamma_hz must be non-negative");
    require(std::isfinite(mode.kappa_out_hz) && mode.kappa_out_hz >= 0.0,
            "modes." + name + ".kappa_out_hz must be non-negative");
    require(std::isfinite(mode.n_th) && mode.n_th >= 0.0,
            "modes." + name + ".n_th must be non-negative");
    require(mode.total_rate_hz() > 0.0,
            "modes." + name + " must have a nonzero total linewidth");
}

} // namespace

void validate(const ChainParams &params)
{
    validate_mode(params.a, "a");
    validate_mode(params.b, "b");
    validate_mode(params.m, "m");
    validate_mode(params.c, "c");

    // Only the optical and microwave modes have detected ports; without them
    // there is no output state to speak of.
    require(params.a.kappa_out_hz > 0.0, "modes.a.kappa_out_hz must be positive (detected port)");
    require(params.c.kappa_out_hz > 0.0, "modes.c.kappa_out_hz must be positive (detected port)");

    require(std::isfinite(params.g_ab_hz) && params.g_ab_hz >= 0.0,
            "couplings.g_ab_hz must be non-negative");
    require(std::isfinite(params.g_mb_hz) && params.g_mb_hz >= 0.0,
            "couplings.g_mb_hz must be non-negative");
    require(std::isfinite(params.g_mc_hz) && params.g_mc_hz >= 0.0,
            "couplings.g_mc_hz must be non-negative");

    require(std::isfinite(params.detuning_hz) && params.detuning_hz != 0.0,
            "detuning_hz must be nonzero");

    const bool has_power = params.drive.power_w.has_value();
    const bool has_alpha = params.drive.alpha.has_value();
    require(has_power != has_alpha, "drive must set exactly one of power_w and alpha");
    if (has_power)
    {
        require(std::isfinite(*params.drive.power_w) && *params.drive.power_w >= 0.0,
                "drive.power_w must be non-negative");
    }
    if (has_alpha)
    {
        require(std::isfinite(*params.drive.alpha) && *params.drive.alpha >= 0.0,
                "drive.alpha must be non-negative");
    }

    if (params.temperature_k)
    {
        require(std::isfinite(*params.temperature_k) && *params.temperature_k >= 0.0,
                "temperature_k must be non-negative");
    }
}

double thermal_occupation(double freq_hz, double temperature_k)
{
    if (temperature_k <= 0.0 || freq_hz <= 0.0)
    {
        return 0.0;
    }
    const double x = hbar_si * two_pi * freq_hz / (k_boltzmann_si * temperature_k);
    return 1.0 / std::expm1(x);
}

double mean_photon_number(const ChainParams &params)
{
    if (params.drive.alpha)
    {
        const double alpha = *params.drive.alpha;
        return alpha * alpha;
    }
    if (!params.drive.power_w)
    {
        throw ConfigError("drive must set one of power_w and alpha");
    }
    const double power = *params.drive.power_w;
    const double omega_a = two_pi * params.a.freq_hz;
    const double kappa_out = two_pi * params.a.kappa_out_hz;
    const double kappa_tot = two_pi * params.a.total_rate_hz();
    const double delta = two_pi * params.detuning_hz;
    const double lorentzian = delta * delta + 0.25 * kappa_tot * kappa_tot;
    return kappa_out * power / (hbar_si * omega_a * lorentzian);
}

double drive_enhancement(const ChainParams &params)
{
    return std::sqrt(mean_photon_number(params));
}

double drive_power_for_enhancement(const ChainParams &params, double alpha)
{
    const double omega_a = two_pi * params.a.freq_hz;
    const double kappa_out = two_pi * params.a.kappa_out_hz;
    const double kappa_tot = two_pi * params.a.total_rate_hz();
    const double delta = two_pi * params.detuning_hz;
    const double lorentzian = delta * delta + 0.25 * kappa_tot * kappa_tot;
    return alpha * alpha * hbar_si * omega_a * lorentzian / kappa_out;
}

Cooperativities cooperativities(const ChainParams &params)
{
    // Built from ordinary-frequency rates; the angular factors cancel in the
    // ratio. The optomechanical entry uses the drive-enhanced coupling.
    const double g_eff = drive_enhancement(params) * params.g_ab_hz;
    Cooperativities coops;
    coops.c_ab = 4.0 * g_eff * g_eff /
                 (params.a.total_rate_hz() * params.b.total_rate_hz());
    coops.c_mb = 4.0 * params.g_mb_hz * params.g_mb_hz /
                 (params.m.total_rate_hz() * params.b.total_rate_hz());
    coops.c_mc = 4.0 * params.g_mc_hz * params.g_mc_hz /
                 (params.m.total_rate_hz() * params.c.total_rate_hz());
    return coops;
}

ChainParams with_resolved_occupations(const ChainParams &params)
{
    if (!params.temperature_k)
    {
        return params;
    }
    ChainParams resolved = params;
    const double temperature = *params.temperature_k;
    resolved.a.n_th = thermal_occupation(params.a.freq_hz, temperature);
    resolved.b.n_th = thermal_occupation(params.b.freq_hz, temperature);
    resolved.m.n_th = thermal_occupation(params.m.freq_hz, temperature);
    resolved.c.n_th = thermal_occupation(params.c.freq_hz, temperature);
    return resolved;
}

ChainParams cooperativity_chain(double c_ab, double c_mb, double c_mc,
                                double rate_hz)
{
    if (!(c_ab >= 0.0) || !(c_mb >= 0.0) || !(c_mc >= 0.0))
    {
        throw ConfigError("cooperativities must be non-negative");
    }
    if (!(rate_hz > 0.0))
    {
        throw ConfigError("cooperativity chain linewidth must be positive");
    }
    // All linewidths equal and minute against the detuning so that the
    // scale-separated closed forms apply; ports fully efficient; every mode
    // resonant with the drive sideband. The contamination of the closed-form
    // limit scales linearly in rate/detuning, so the default ratio (1e-14)
    // leaves those corrections far below double-precision comparisons.
    constexpr double detuning_hz = 1e11;

    ChainParams params;
    params.a = {detuning_hz, 0.0, rate_hz, 0.0};
    params.b = {detuning_hz, rate_hz, 0.0, 0.0};
    params.m = {detuning_hz, rate_hz, 0.0, 0.0};
    params.c = {detuning_hz, 0.0, rate_hz, 0.0};
    params.detuning_hz = detuning_hz;

    // G = alpha * g_ab realizes c_ab = 4 G^2 / (kappa_a * gamma_b).
    params.g_ab_hz = 1.0;
    params.drive.alpha = 0.5 * std::sqrt(c_ab) * rate_hz;
    params.g_mb_hz = 0.5 * std::sqrt(c_mb) * rate_hz;
    params.g_mc_hz = 0.5 * std::sqrt(c_mc) * rate_hz;
    return params;
}

ChainParams table1_preset()
{
    ChainParams params;
    params.a = {200e12, 0.1e9, 1e9, 0.0};
    params.b = {10e9, 1e3, 0.0, 0.0};
    params.m = {10e9, 1e6, 0.0, 0.0};
    params.c = {10e9, 1e6, 100e6, 0.0};
    params.g_ab_hz = 0.2e6;
    params.g_mb_hz = 10e6;
    params.g_mc_hz = 180e6;
    params.detuning_hz = 10e9;
    params.drive.alpha = 42.0;
    return params;
}

ChainParams table2_preset()
{
    ChainParams params;
    params.a = {193.5e12, 1e9, 99e9, 0.0};
    params.b = {0.567e9, 5e3, 0.0, 0.0};
    params.m = {0.567e9, 5e6, 0.0, 0.0};
    params.c = {0.567e9, 0.01e6, 0.99e6, 0.0};
    params.g_ab_hz = 1.0e3;
    params.g_mb_hz = 5e6;
    params.g_mc_hz = 10e6;
    params.detuning_hz = 0.567e9;
    // Pump ceiling of the disk design: enhancement realizing C_ab = 5.
    params.drive.alpha = 25000.0;
    return params;
}

ChainParams preset(const std::string &name)
{
    if (name == "table1")
    {
        return table1_preset();
    }
    if (name == "table2")
    {
        return table2_preset();
    }
    throw ConfigError("unknown preset '" + name + "' (expected table1 or table2)");
}

} // namespace omchain
