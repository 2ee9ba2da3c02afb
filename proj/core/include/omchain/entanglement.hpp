#ifndef OMCHAIN_ENTANGLEMENT_HPP
#define OMCHAIN_ENTANGLEMENT_HPP

#include <vector>

#include <Eigen/Dense>

#include "omchain/model.hpp"
#include "omchain/scattering.hpp"

namespace omchain
{

// Smallest symplectic eigenvalue of the partially transposed state and the
// logarithmic negativity E_N = max(0, -ln eta_minus). eta_minus < 1 certifies
// entanglement.
struct NegativityResult
{
    double eta_minus = 1.0;
    double log_negativity = 0.0;
};

// Closed form for a general two-mode covariance via the partial-transpose
// invariant Sigma~ = det(alice) + det(bob) - 2 det(cross).
NegativityResult log_negativity(const BipartiteCov &cov);

// Same quantity for the rotated-block family the chain produces,
//   alice = a1*I, bob = a2*I, cross = [[a3, a4], [a4, -a3]],
// evaluated directly from the four scalars.
NegativityResult log_negativity_general(double a1, double a2, double a3, double a4);

// Coefficients of the resonant narrow-band output covariance in the
// scale-separated ideal-port limit, as functions of the cooperativities:
// optical block c1*I, microwave block c2*I, cross block c3*sigma_x.
struct ClosedFormCoefficients
{
    double c1 = 1.0;
    double c2 = 1.0;
    double c3 = 0.0;
};

// Throws NumericalError when the cooperativities lie on or beyond the
// instability boundary c_ab >= 1 + c_mb/(1 + c_mc) (vanishing denominator).
ClosedFormCoefficients closed_form_coefficients(const Cooperativities &coops);

// The corresponding 4x4 optical-microwave covariance.
BipartiteCov closed_form_covariance(const Cooperativities &coops);

// Gaussian Renyi-2 steering in both directions:
//   S_{a->c} = max(0, ln det(alice) - ln det(sigma)) / 2, and mirrored.
// Nonzero value = that party can steer the other.
struct SteeringResult
{
    double a_to_c = 0.0;
    double c_to_a = 0.0;
};

SteeringResult steering(const BipartiteCov &cov);

// Symplectic spectrum of an even-dimensional covariance matrix: the moduli
// of the eigenvalues of i*Omega*sigma, one per mode. All >= 1 for a physical
// state (vacuum = identity normalization).
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd &sigma);

// Two-mode squeezed covariance with squeezing parameter r:
// cosh(2r) on the diagonal, +-sinh(2r) cross correlations. Its logarithmic
// negativity is exactly 2r.
BipartiteCov two_mode_squeezed(double r);

} // namespace omchain

#endif // OMCHAIN_ENTANGLEMENT_HPP
