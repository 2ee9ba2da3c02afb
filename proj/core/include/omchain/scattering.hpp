#ifndef OMCHAIN_SCATTERING_HPP
#define OMCHAIN_SCATTERING_HPP

#include <vector>

#include <Eigen/Dense>

#include "omchain/dynamics.hpp"

namespace omchain
{

using Matrix12cd = Eigen::Matrix<std::complex<double>, 12, 12>;
using Matrix8d = Eigen::Matrix<double, 8, 8>;

// Thermal occupations of the six noise channels, one value per physical
// bath (both optical channels share the optical bath, both microwave
// channels the microwave bath).
struct NoiseOccupations
{
    double a = 0.0;
    double b = 0.0;
    double m = 0.0;
    double c = 0.0;

    // Per-mode Bose-Einstein occupations: the n_th fields of params, or, if
    // params.temperature_k is set, the distribution at each mode frequency.
    static NoiseOccupations for_params(const ChainParams &params);

    // The same occupation on all four baths; used for worst-case thermal
    // scans where every channel is heated alike.
    static NoiseOccupations uniform(double n);
};

// Frequency-domain scattering matrix in the quadrature basis: maps the
// twelve input noise quadratures to the corresponding output quadratures at
// angular frequency 2*pi*omega_hz. Unitary (symplectic) when all ports are
// included, which is what makes the output state physical.
Matrix12cd scattering_matrix(const DriftModel &model, double omega_hz);

// Symmetrized covariance matrix of the four filtered output modes
// (optical port, phonon bath, magnon bath, microwave port), quadrature order
// (x_a, p_a, x_b, p_b, x_m, p_m, x_c, p_c), vacuum = identity.
struct OutputCovariance
{
    double center_hz = 0.0;  // filter center frequency / 2*pi
    Matrix8d sigma = Matrix8d::Identity();

    // Filtered-path metadata: quadrature convergence flag and the estimated
    // relative truncation error of the bandwidth average.
    bool converged = true;
    double quadrature_error = 0.0;
};

// Narrow-band limit: the covariance of output modes filtered at center
// omega_hz with vanishing bandwidth. A finite filter pairs each mode's
// resonant sideband component with its conjugate at the mirrored frequency;
// the construction keeps exactly those pairings (the discarded same-sideband
// terms carry a filter overlap factor ~exp(-omega^2/sigma_f^2), i.e. zero for
// any realistic bandwidth). Throws NumericalError if the result fails its
// imaginary-residue or physicality checks.
OutputCovariance output_covariance(const DriftModel &model,
                                   const NoiseOccupations &noise,
                                   double omega_hz);

// Finite-bandwidth filter: Gaussian power-spectral weight of standard
// deviation sigma_f_hz centered at omega_hz, averaged with Gauss-Hermite
// quadrature. Sets converged/quadrature_error from an internal rule-doubling
// estimate.
OutputCovariance filtered_covariance(const DriftModel &model,
                                     const NoiseOccupations &noise,
                                     double omega_hz,
                                     double sigma_f_hz);

// Two-mode reduction of an output covariance, block layout
//   [ alice   cross ]
//   [ cross'  bob   ]
// with 2x2 blocks. Defined for the two detected ports: optical (index 0)
// and microwave (index 3).
struct BipartiteCov
{
    Eigen::Matrix4d sigma = Eigen::Matrix4d::Identity();

    Eigen::Matrix2d alice() const { return sigma.topLeftCorner<2, 2>(); }
    Eigen::Matrix2d bob() const { return sigma.bottomRightCorner<2, 2>(); }
    Eigen::Matrix2d cross() const { return sigma.topRightCorner<2, 2>(); }
};

// first_mode/second_mode index the four output modes 0..3 (a, b, m, c);
// only the detected-port pair (0, 3) is accepted.
BipartiteCov reduce_bipartite(const OutputCovariance &cov,
                              int first_mode = 0,
                              int second_mode = 3);

// Row of a covariance spectrum dump: filter center and the ten independent
// entries of the optical-microwave bipartite covariance (upper triangle in
// row-major order).
struct SpectrumRow
{
    double center_hz = 0.0;
    std::array<double, 10> entries{};
};

// Bipartite covariance spectrum over a linear grid of filter centers.
std::vector<SpectrumRow> covariance_spectrum(const DriftModel &model,
                                             const NoiseOccupations &noise,
                                             double omega_min_hz,
                                             double omega_max_hz,
                                             int points);

} // namespace omchain

#endif // OMCHAIN_SCATTERING_HPP
