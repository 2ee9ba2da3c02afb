#include "omchain/scattering.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "omchain/errors.hpp"
#include "gauss_hermite.hpp"

namespace omchain
{
namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::complex<double> im{0.0, 1.0};

using Matrix12d = Eigen::Matrix<double, 12, 12>;

// Which sideband each noise-channel entry is observed at when the filter
// sits at +omega: +1 means the creation-operator row of the pair carries the
// signal at +omega, -1 the annihilation row. The blue-driven optical
// channels have their resonant (pair-creation) component on the creation
// side; the lab-frame phonon, magnon and microwave channels on the
// annihilation side.
constexpr std::array<int, 12> center_sign = {+1, -1, +1, -1, -1, +1, -1, +1, -1, +1, -1, +1};

// Per-pair quadrature map: (x, p) = Q2 (o+, o) with x = o+ + o,
// p = i (o+ - o); vacuum maps to the identity covariance.
Matrix12cd quadrature_map()
{
    Matrix12cd q = Matrix12cd::Zero();
    for (int k = 0; k < 6; ++k)
    {
        q(2 * k, 2 * k) = 1.0;
        q(2 * k, 2 * k + 1) = 1.0;
        q(2 * k + 1, 2 * k) = im;
        q(2 * k + 1, 2 * k + 1) = -im;
    }
    return q;
}

const Matrix12cd &q12()
{
    static const Matrix12cd q = quadrature_map();
    return q;
}

// Bare-operator scattering matrix S(omega) = 1 + B^T (i omega + A)^{-1} B.
Matrix12cd bare_scattering(const DriftModel &model, double omega_rad)
{
    Matrix8cd resolvent_arg = model.drift;
    for (int i = 0; i < 8; ++i)
    {
        resolvent_arg(i, i) += im * omega_rad;
    }
    const Eigen::Matrix<std::complex<double>, 8, 12> rhs =
        model.input_map.cast<std::complex<double>>();
    const Eigen::Matrix<std::complex<double>, 8, 12> solved =
        resolvent_arg.partialPivLu().solve(rhs);
    if (!solved.allFinite())
    {
        throw NumericalError(
            "singular resolvent at frequency " + std::to_string(omega_rad / two_pi) +
            " Hz: a drift eigenvalue lies on the probed line (marginally "
            "stable system)");
    }
    Matrix12cd s = Matrix12cd::Identity();
    s.noalias() += model.input_map.transpose().cast<std::complex<double>>() * solved;
    return s;
}

// Bare-operator noise correlator at conjugate frequency arguments: each
// channel block is [[0, n], [n+1, 0]].
Matrix12d bare_noise(const NoiseOccupations &noise)
{
    const std::array<double, 6> occupation = {noise.a, noise.a, noise.b,
                                              noise.m, noise.c, noise.c};
    Matrix12d n = Matrix12d::Zero();
    for (int k = 0; k < 6; ++k)
    {
        n(2 * k, 2 * k + 1) = occupation[static_cast<std::size_t>(k)];
        n(2 * k + 1, 2 * k) = occupation[static_cast<std::size_t>(k)] + 1.0;
    }
    return n;
}

// Masked two-sideband covariance kernel in the bare basis. Entry (i, j)
// is taken from the scattering evaluated at row i's own sideband, and kept
// only when column j sits on the conjugate sideband: a narrow filter pairs
// exclusively conjugate-frequency components, and the discarded same-side
// terms would carry a filter overlap factor that is zero for any bandwidth
// small against the center frequency.
Matrix12cd masked_kernel(const DriftModel &model, const NoiseOccupations &noise,
                         double omega_rad)
{
    const Matrix12cd s_plus = bare_scattering(model, omega_rad);
    const Matrix12cd s_minus = bare_scattering(model, -omega_rad);
    const Matrix12d n = bare_noise(noise);

    const Matrix12cd corr_plus = s_plus * n * s_minus.transpose();
    const Matrix12cd corr_minus = s_minus * n * s_plus.transpose();

    Matrix12cd m = Matrix12cd::Zero();
    for (int i = 0; i < 12; ++i)
    {
        const auto &row_source = center_sign[static_cast<std::size_t>(i)] > 0 ? corr_plus : corr_minus;
        for (int j = 0; j < 12; ++j)
        {
            if (center_sign[static_cast<std::size_t>(j)] == -center_sign[static_cast<std::size_t>(i)])
            {
                m(i, j) = row_source(i, j);
            }
        }
    }
    return m;
}

// Full 12-channel symmetrized quadrature covariance at filter center omega.
Matrix12d quadrature_covariance(const DriftModel &model, const NoiseOccupations &noise,
                                double omega_rad)
{
    const Matrix12cd kernel = masked_kernel(model, noise, omega_rad);
    const Matrix12cd in_quadratures = q12() * kernel * q12().transpose();
    const Matrix12cd symmetrized = 0.5 * (in_quadratures + in_quadratures.transpose());

    const double scale = symmetrized.real().cwiseAbs().maxCoeff();
    const double residue = symmetrized.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-8 * std::max(scale, 1.0))
    {
        throw NumericalError("output covariance has a non-negligible imaginary residue");
    }
    return symmetrized.real();
}

// The four output modes with detectable quadratures, in (optical port,
// phonon bath, magnon bath, microwave port) order, as channel indices.
constexpr std::array<int, 8> output_rows = {0, 1, 4, 5, 6, 7, 8, 9};

Matrix8d select_outputs(const Matrix12d &full)
{
    Matrix8d out;
    for (int i = 0; i < 8; ++i)
    {
        for (int j = 0; j < 8; ++j)
        {
            out(i, j) = full(output_rows[static_cast<std::size_t>(i)],
                             output_rows[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

} // namespace

NoiseOccupations NoiseOccupations::for_params(const ChainParams &params)
{
    const ChainParams resolved = with_resolved_occupations(params);
    NoiseOccupations noise;
    noise.a = resolved.a.n_th;
    noise.b = resolved.b.n_th;
    noise.m = resolved.m.n_th;
    noise.c = resolved.c.n_th;
    return noise;
}

NoiseOccupations NoiseOccupations::uniform(double n)
{
    return NoiseOccupations{n, n, n, n};
}

Matrix12cd scattering_matrix(const DriftModel &model, double omega_hz)
{
    const Matrix12cd bare = bare_scattering(model, two_pi * omega_hz);
    // Change of basis to quadratures; the inverse of the (non-unitary)
    // quadrature map is applied from the right.
    return q12() * bare * q12().inverse();
}

OutputCovariance output_covariance(const DriftModel &model,
                                   const NoiseOccupations &noise,
                                   double omega_hz)
{
    OutputCovariance cov;
    cov.center_hz = omega_hz;
    cov.sigma = select_outputs(quadrature_covariance(model, noise, two_pi * omega_hz));
    cov.converged = true;
    cov.quadrature_error = 0.0;
    return cov;
}

OutputCovariance filtered_covariance(const DriftModel &model,
                                     const NoiseOccupations &noise,
                                     double omega_hz,
                                     double sigma_f_hz)
{
    if (sigma_f_hz < 0.0)
    {
        throw ConfigError("filter bandwidth must be non-negative");
    }
    if (sigma_f_hz == 0.0)
    {
        return output_covariance(model, noise, omega_hz);
    }

    const double center = two_pi * omega_hz;
    const double width = two_pi * sigma_f_hz;

    // Gaussian power-spectral weight, averaged with the probabilists'
    // Gauss-Hermite rule; the half-size rule provides the error estimate.
    Matrix12d fine = Matrix12d::Zero();
    for (std::size_t k = 0; k < detail::gh64_size; ++k)
    {
        fine += detail::gh64_weights[k] *
                quadrature_covariance(model, noise, center + width * detail::gh64_nodes[k]);
    }
    Matrix12d coarse = Matrix12d::Zero();
    for (std::size_t k = 0; k < detail::gh32_size; ++k)
    {
        coarse += detail::gh32_weights[k] *
                  quadrature_covariance(model, noise, center + width * detail::gh32_nodes[k]);
    }

    OutputCovariance cov;
    cov.center_hz = omega_hz;
    cov.sigma = select_outputs(fine);
    const double scale = fine.cwiseAbs().maxCoeff();
    cov.quadrature_error = (fine - coarse).cwiseAbs().maxCoeff() / std::max(scale, 1e-300);
    cov.converged = cov.quadrature_error < 1e-6;
    return cov;
}

BipartiteCov reduce_bipartite(const OutputCovariance &cov, int first_mode, int second_mode)
{
    if (!((first_mode == 0 && second_mode == 3) || (first_mode == 3 && second_mode == 0)))
    {
        throw ConfigError("bipartite reduction is defined for the detected ports: "
                          "optical (0) and microwave (3)");
    }
    const std::array<int, 4> rows = {2 * first_mode, 2 * first_mode + 1,
                                     2 * second_mode, 2 * second_mode + 1};
    BipartiteCov bip;
    for (int i = 0; i < 4; ++i)
    {
        for (int j = 0; j < 4; ++j)
        {
            bip.sigma(i, j) = cov.sigma(rows[static_cast<std::size_t>(i)],
                                        rows[static_cast<std::size_t>(j)]);
        }
    }
    return bip;
}

std::vector<SpectrumRow> covariance_spectrum(const DriftModel &model,
                                             const NoiseOccupations &noise,
                                             double omega_min_hz,
                                             double omega_max_hz,
                                             int points)
{
    if (points < 2)
    {
        throw ConfigError("covariance spectrum needs at least two points");
    }
    std::vector<SpectrumRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    const double step = (omega_max_hz - omega_min_hz) / (points - 1);
    for (int k = 0; k < points; ++k)
    {
        const double omega = omega_min_hz + step * k;
        const BipartiteCov bip = reduce_bipartite(output_covariance(model, noise, omega));
        SpectrumRow row;
        row.center_hz = omega;
        int entry = 0;
        for (int i = 0; i < 4; ++i)
        {
            for (int j = i; j < 4; ++j)
            {
                row.entries[static_cast<std::size_t>(entry++)] = bip.sigma(i, j);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace omchain
