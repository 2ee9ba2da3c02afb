#ifndef OMCHAIN_DYNAMICS_HPP
#define OMCHAIN_DYNAMICS_HPP

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "omchain/model.hpp"

namespace omchain
{

using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;
using Matrix8x12d = Eigen::Matrix<double, 8, 12>;

// Linearized Langevin generator of the chain in the bare-operator basis
//   (a+, a, b+, b, m+, m, c+, c)
// ("+" marks the creation operator of each pair), written in the frame
// rotating at the optical drive. The twelve noise channels are ordered
//   (a_out, a_int, b, m, c_out, c_int)
// with a (creation, annihilation) pair each; input_map holds the -sqrt(rate)
// couplings of the standard input-output convention.
struct DriftModel
{
    Matrix8cd drift;        // generator A, angular units (rad/s)
    Matrix8x12d input_map;  // noise input couplings B
    double rate_scale = 0.0;  // largest total damping rate (rad/s), for stability margins
};

// Builds the drift from the chain parameters. The optomechanical coupling is
// kept in full (a + a+)(b + b+) form - in the drive frame both of its terms
// are resonant structures of the blue-sideband operating point - while the
// magnon couplings are beam-splitter form when rotating_wave is true. With
// rotating_wave = false the counter-rotating magnon terms are retained as
// static couplings for sensitivity studies.
DriftModel build_drift(const ChainParams &params, bool rotating_wave = true);

// Spectral stability of the drift. margin > 0 means every eigenvalue decays;
// the threshold leaves an epsilon proportional to the largest damping rate so
// that marginal points are reported as unstable rather than flapping.
struct StabilityReport
{
    std::array<std::complex<double>, 8> eigenvalues;  // of the generator (rad/s)
    double margin = 0.0;  // -max Re(eigenvalue), rad/s
    bool stable = false;
};

StabilityReport stability(const DriftModel &model);

// Normal modes of the undriven phonon-magnon-microwave subsystem (the
// optical coupling switched off). The magnon-microwave coupling splits the
// resonant pair into hybrid modes; their positions set where output
// entanglement peaks when the filter center is swept.
struct HybridMode
{
    double freq_hz = 0.0;       // hybrid mode frequency / 2*pi
    double linewidth_hz = 0.0;  // full linewidth / 2*pi
};

// The three hybrid modes, sorted by ascending frequency.
std::array<HybridMode, 3> hybrid_mode_frequencies(const ChainParams &params);

} // namespace omchain

#endif // OMCHAIN_DYNAMICS_HPP
