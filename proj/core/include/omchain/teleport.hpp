#ifndef OMCHAIN_TELEPORT_HPP
#define OMCHAIN_TELEPORT_HPP

#include <vector>

#include <Eigen/Dense>

#include "omchain/entanglement.hpp"
#include "omchain/scattering.hpp"

namespace omchain
{

// Single-mode Gaussian input state for the teleporter. Quadrature
// convention: vacuum = identity; squeezed(r) has variance e^{2r} in x and
// e^{-2r} in p (x-antisqueezed for r > 0).
struct InputState
{
    Eigen::Matrix2d sigma = Eigen::Matrix2d::Identity();
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();

    static InputState coherent(const Eigen::Vector2d &mean = Eigen::Vector2d::Zero());
    static InputState squeezed(double r, const Eigen::Vector2d &mean = Eigen::Vector2d::Zero());
};

// Result of one teleportation: the output-state covariance, the linear map
// applied to the measured homodyne amplitudes when displacing the receiver
// (identity for the unit-gain protocol), and the fidelity against the input.
struct TeleportResult
{
    Eigen::Matrix2d sigma_out = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d displacement_map = Eigen::Matrix2d::Identity();
    double fidelity = 0.0;
};

// Unit-gain continuous-variable teleportation over a two-mode resource:
// the input is mixed with the sender arm on a balanced beam splitter, both
// outputs are homodyned, and the receiver arm is displaced by the measured
// amplitudes. Before the measurement the local oscillator phases are chosen
// to align the resource's cross correlations with the measured quadratures
// (a local rotation on each arm; it cannot change the entanglement but is
// required to exploit it). The output mean equals the input mean at unit
// gain, so the fidelity is displacement-independent.
TeleportResult teleport_output(const BipartiteCov &resource, const InputState &input);

// Overlap fidelity of two single-mode Gaussian states,
//   F = 2 exp(-d' (s1+s2)^{-1} d / 2) / sqrt(det(s1+s2)),
// with d the difference of the means.
double gaussian_fidelity(const Eigen::Matrix2d &sigma1, const Eigen::Vector2d &mean1,
                         const Eigen::Matrix2d &sigma2, const Eigen::Vector2d &mean2);

// Brute-force check of the same overlap: both Wigner functions are tabulated
// on a square grid and integrated with the trapezoidal rule,
// F = 4*pi * integral(W1 * W2). Default grid: [-12, 12]^2, 601 x 601.
double wigner_overlap_fidelity(const Eigen::Matrix2d &sigma1, const Eigen::Vector2d &mean1,
                               const Eigen::Matrix2d &sigma2, const Eigen::Vector2d &mean2,
                               double half_width = 12.0, int points = 601);

// One row of the fidelity-versus-entanglement benchmark over two-mode
// squeezed resources.
struct BenchmarkRow
{
    double r_in = 0.0;           // input squeezing
    double e_n = 0.0;            // resource logarithmic negativity
    double r_resource = 0.0;     // resource squeezing, e_n / 2
    double f_closed_form = 0.0;  // analytic path: output-state algebra + overlap formula
    double f_oracle = 0.0;       // fidelity from the Wigner-grid overlap
};

// Benchmark table: for each input squeezing and each entanglement value the
// two fidelity paths are evaluated on the corresponding two-mode squeezed
// resource. with_oracle = false skips the grid integration (fast preview,
// f_oracle = NaN). jobs > 1 parallelizes over rows with a worker pool;
// assembly preserves row order.
std::vector<BenchmarkRow> fidelity_vs_negativity_benchmark(
    const std::vector<double> &r_in_values,
    const std::vector<double> &e_n_values,
    bool with_oracle = true,
    int jobs = 1);

// Analytic fidelity of unit-gain teleportation of a squeezed input over a
// two-mode squeezed resource: F = 1/sqrt(1 + eps*cosh(2 r_in) + eps^2/4)
// with eps = 2 exp(-2 r_resource). The measurement algebra must reproduce
// this exactly.
double tms_teleport_fidelity(double r_resource, double r_in);

// End-to-end teleportation through the chain: drift model, filtered output
// covariance at (omega_hz, sigma_f_hz), optical-microwave reduction, then
// teleport_output. sigma_f_hz = 0 selects the narrow-band limit. Throws
// NumericalError when the operating point is unstable.
TeleportResult chain_teleport_fidelity(const ChainParams &params,
                                       const InputState &input,
                                       double omega_hz,
                                       double sigma_f_hz = 0.0);

} // namespace omchain

#endif // OMCHAIN_TELEPORT_HPP
