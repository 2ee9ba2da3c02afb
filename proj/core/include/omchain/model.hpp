#ifndef OMCHAIN_MODEL_HPP
#define OMCHAIN_MODEL_HPP

#include <optional>
#include <string>

#include "omchain/errors.hpp"

namespace omchain
{

// One bosonic mode of the chain together with its bath couplings. All
// frequencies and rates are ordinary frequencies in Hz (cycles per second);
// angular factors of 2*pi are applied internally where they matter.
struct ModeSpec
{
    double freq_hz = 0.0;       // mode frequency omega / 2*pi
    double gamma_hz = 0.0;      // internal (undetected) loss rate gamma_int / 2*pi
    double kappa_out_hz = 0.0;  // coupling rate to the detected output port kappa_out / 2*pi
    double n_th = 0.0;          // thermal occupation of the attached bath

    double total_rate_hz() const { return gamma_hz + kappa_out_hz; }

    // Fraction of the mode's decay routed to the accessible output port.
    double port_efficiency() const
    {
        const double total = total_rate_hz();
        return total > 0.0 ? kappa_out_hz / total : 0.0;
    }
};

// Optical drive strength, given either as pump power or directly as the
// field-enhancement factor alpha = sqrt(steady-state intracavity photon
// number). Exactly one of the two must be set.
struct DriveSpec
{
    std::optional<double> power_w;  // pump power in watts
    std::optional<double> alpha;    // enhancement factor (dimensionless)
};

// Full parameter set of the four-mode chain: a driven optical cavity mode
// (a) coupled to a mechanical mode (b) via radiation pressure, a magnon mode
// (m) coupled to the phonons magnetoelastically, and a microwave cavity mode
// (c) coupled to the magnons magnetic-dipole style. Only a and c have
// detected output ports.
struct ChainParams
{
    ModeSpec a;  // optical cavity mode (driven on its blue sideband)
    ModeSpec b;  // mechanical (phonon) mode
    ModeSpec m;  // magnon (Kittel) mode
    ModeSpec c;  // microwave cavity mode

    double g_ab_hz = 0.0;  // bare optomechanical coupling / 2*pi
    double g_mb_hz = 0.0;  // magnomechanical coupling / 2*pi
    double g_mc_hz = 0.0;  // magnon-microwave coupling / 2*pi

    double detuning_hz = 0.0;  // drive detuning Delta / 2*pi (> 0 = blue)

    DriveSpec drive;

    // If set, bath occupations are recomputed from the Bose-Einstein
    // distribution at each mode's own frequency, overriding the per-mode
    // n_th fields.
    std::optional<double> temperature_k;
};

// Dimensionless cooperativities C_ij = 4 g_ij^2 / (rate_i * rate_j) built
// from total linewidths; the optomechanical one uses the drive-enhanced
// coupling G = alpha * g_ab.
struct Cooperativities
{
    double c_ab = 0.0;
    double c_mb = 0.0;
    double c_mc = 0.0;
};

// Checks physical consistency (non-negative rates, positive frequencies,
// exactly one drive quantity, ports on a and c). Throws ConfigError naming
// the offending field.
void validate(const ChainParams &params);

// Bose-Einstein occupation 1 / (exp(hbar*omega/kB*T) - 1); zero for T <= 0.
double thermal_occupation(double freq_hz, double temperature_k);

// Steady-state intracavity photon number of the pumped optical mode,
// n = kappa_out * P / (hbar * omega_a * (Delta^2 + kappa_tot^2/4)).
// Resolves the drive from either power or alpha.
double mean_photon_number(const ChainParams &params);

// Field-enhancement factor alpha = sqrt(mean photon number).
double drive_enhancement(const ChainParams &params);

// Pump power that realizes a given enhancement factor for these chain
// parameters (inverse of the mean-photon-number map).
double drive_power_for_enhancement(const ChainParams &params, double alpha);

// Cooperativities of the current operating point.
Cooperativities cooperativities(const ChainParams &params);

// Copy of params with the per-mode n_th fields replaced by Bose-Einstein
// occupations when temperature_k is set; otherwise returns params unchanged.
ChainParams with_resolved_occupations(const ChainParams &params);

// Idealized realization of a cooperativity triple: all four total linewidths
// equal to rate_hz and tiny compared to the detuning, unit port efficiency,
// all modes resonant with the drive sideband, zero temperature. In this
// limit the output covariance reduces to the cooperativity closed forms;
// corrections scale linearly in rate_hz / detuning. The default keeps them
// far below double precision. A larger rate_hz trades closed-form purity
// for stability margins that stand clear of the eigensolver noise floor.
ChainParams cooperativity_chain(double c_ab, double c_mb, double c_mc,
                                double rate_hz = 1e-3);

// Named operating points. "table1": YIG-sphere / 3D-microwave-cavity
// parameter set (10 GHz band, alpha = 42). "table2": integrated
// magnetic-disk parameter set (567 MHz band).
ChainParams table1_preset();
ChainParams table2_preset();
ChainParams preset(const std::string &name);  // throws ConfigError on unknown name

} // namespace omchain

#endif // OMCHAIN_MODEL_HPP
