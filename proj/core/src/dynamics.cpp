#include "omchain/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace omchain
{
namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::complex<double> im{0.0, 1.0};

} // namespace

DriftModel build_drift(const ChainParams &raw_params, bool rotating_wave)
{
    validate(raw_params);
    const ChainParams params = with_resolved_occupations(raw_params);

    const double delta = two_pi * params.detuning_hz;
    const double omega_b = two_pi * params.b.freq_hz;
    const double omega_m = two_pi * params.m.freq_hz;
    const double omega_c = two_pi * params.c.freq_hz;
    const double kappa_a = two_pi * params.a.total_rate_hz();
    const double gamma_b = two_pi * params.b.total_rate_hz();
    const double gamma_m = two_pi * params.m.total_rate_hz();
    const double kappa_c = two_pi * params.c.total_rate_hz();
    const double g_eff = two_pi * drive_enhancement(params) * params.g_ab_hz;
    const double g_mb = two_pi * params.g_mb_hz;
    const double g_mc = two_pi * params.g_mc_hz;

    DriftModel model;
    Matrix8cd &a = model.drift;
    a.setZero();

    // Basis (a+, a, b+, b, m+, m, c+, c). The optical rows live in the drive
    // frame (detuning in place of the optical frequency); the others in the
    // lab frame. Radiation pressure couples the optical quadrature to the
    // mechanical displacement, hence to both b and b+.
    a(0, 0) = -im * delta - 0.5 * kappa_a;
    a(0, 2) = im * g_eff;
    a(0, 3) = im * g_eff;
    a(1, 1) = im * delta - 0.5 * kappa_a;
    a(1, 2) = -im * g_eff;
    a(1, 3) = -im * g_eff;

    a(2, 0) = im * g_eff;
    a(2, 1) = im * g_eff;
    a(2, 2) = im * omega_b - 0.5 * gamma_b;
    a(2, 4) = im * g_mb;
    a(3, 0) = -im * g_eff;
    a(3, 1) = -im * g_eff;
    a(3, 3) = -im * omega_b - 0.5 * gamma_b;
    a(3, 5) = -im * g_mb;

    a(4, 2) = im * g_mb;
    a(4, 4) = im * omega_m - 0.5 * gamma_m;
    a(4, 6) = im * g_mc;
    a(5, 3) = -im * g_mb;
    a(5, 5) = -im * omega_m - 0.5 * gamma_m;
    a(5, 7) = -im * g_mc;

    a(6, 4) = im * g_mc;
    a(6, 6) = im * omega_c - 0.5 * kappa_c;
    a(7, 5) = -im * g_mc;
    a(7, 7) = -im * omega_c - 0.5 * kappa_c;

    if (!rotating_wave)
    {
        // Counter-rotating magnon terms, kept as static couplings for
        // sensitivity studies of the beam-splitter approximation.
        a(2, 5) += im * g_mb;
        a(3, 4) += -im * g_mb;
        a(4, 3) += im * g_mb;
        a(4, 7) += im * g_mc;
        a(5, 2) += -im * g_mb;
        a(5, 6) += -im * g_mc;
        a(6, 5) += im * g_mc;
        a(7, 4) += -im * g_mc;
    }

    // Noise channels (a_out, a_int, b, m, c_out, c_int), each a (+, no-+)
    // pair, standard input-output sign.
    Matrix8x12d &b = model.input_map;
    b.setZero();
    const double r_a_out = std::sqrt(two_pi * params.a.kappa_out_hz);
    const double r_a_int = std::sqrt(two_pi * params.a.gamma_hz);
    const double r_b = std::sqrt(gamma_b);
    const double r_m = std::sqrt(gamma_m);
    const double r_c_out = std::sqrt(two_pi * params.c.kappa_out_hz);
    const double r_c_int = std::sqrt(two_pi * params.c.gamma_hz);
    b(0, 0) = -r_a_out;
    b(1, 1) = -r_a_out;
    b(0, 2) = -r_a_int;
    b(1, 3) = -r_a_int;
    b(2, 4) = -r_b;
    b(3, 5) = -r_b;
    b(4, 6) = -r_m;
    b(5, 7) = -r_m;
    b(6, 8) = -r_c_out;
    b(7, 9) = -r_c_out;
    b(6, 10) = -r_c_int;
    b(7, 11) = -r_c_int;

    model.rate_scale = std::max({kappa_a, gamma_b, gamma_m, kappa_c});
    return model;
}

StabilityReport stability(const DriftModel &model)
{
    Eigen::ComplexEigenSolver<Matrix8cd> solver(model.drift, /*computeEigenvectors=*/false);
    StabilityReport report;
    double max_real = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i)
    {
        report.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        max_real = std::max(max_real, solver.eigenvalues()(i).real());
    }
    report.margin = -max_real;
    // Margin threshold proportional to the largest damping rate, so that
    // marginal operating points read as unstable instead of flickering with
    // rounding noise.
    const double epsilon = 1e-9 * model.rate_scale;
    report.stable = report.margin > epsilon;
    return report;
}

std::array<HybridMode, 3> hybrid_mode_frequencies(const ChainParams &params)
{
    validate(params);
    const double omega_b = two_pi * params.b.freq_hz;
    const double omega_m = two_pi * params.m.freq_hz;
    const double omega_c = two_pi * params.c.freq_hz;
    const double gamma_b = two_pi * params.b.total_rate_hz();
    const double gamma_m = two_pi * params.m.total_rate_hz();
    const double kappa_c = two_pi * params.c.total_rate_hz();
    const double g_mb = two_pi * params.g_mb_hz;
    const double g_mc = two_pi * params.g_mc_hz;

    // Annihilation-sector generator of the undriven b-m-c subsystem.
    Eigen::Matrix3cd sub;
    sub.setZero();
    sub(0, 0) = -im * omega_b - 0.5 * gamma_b;
    sub(0, 1) = -im * g_mb;
    sub(1, 0) = -im * g_mb;
    sub(1, 1) = -im * omega_m - 0.5 * gamma_m;
    sub(1, 2) = -im * g_mc;
    sub(2, 1) = -im * g_mc;
    sub(2, 2) = -im * omega_c - 0.5 * kappa_c;

    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(sub, /*computeEigenvectors=*/false);
    std::array<HybridMode, 3> modes;
    for (int i = 0; i < 3; ++i)
    {
        const std::complex<double> lambda = solver.eigenvalues()(i);
        modes[static_cast<std::size_t>(i)].freq_hz = -lambda.imag() / two_pi;
        modes[static_cast<std::size_t>(i)].linewidth_hz = -2.0 * lambda.real() / two_pi;
    }
    std::sort(modes.begin(), modes.end(),
              [](const HybridMode &lhs, const HybridMode &rhs) { return lhs.freq_hz < rhs.freq_hz; });
    return modes;
}

} // namespace omchain
