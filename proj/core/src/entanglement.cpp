#include "omchain/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "omchain/errors.hpp"

namespace omchain
{
namespace
{

// Smallest partial-transpose symplectic eigenvalue from the two-mode
// invariants: eta^2 = (Sigma~ - sqrt(Sigma~^2 - 4 det sigma)) / 2 with
// Sigma~ = det(alice) + det(bob) - 2 det(cross).
NegativityResult negativity_from_invariants(double sigma_tilde, double det_sigma)
{
    double disc = sigma_tilde * sigma_tilde - 4.0 * det_sigma;
    if (disc < 0.0)
    {
        // Degenerate partial-transpose spectrum: the discriminant should be
        // non-negative up to rounding of the determinants.
        if (disc < -1e-12 * sigma_tilde * sigma_tilde)
        {
            throw NumericalError("two-mode covariance invariants are inconsistent "
                                 "(negative discriminant)");
        }
        disc = 0.0;
    }
    const double eta_sq = 0.5 * (sigma_tilde - std::sqrt(disc));
    if (!(eta_sq > 0.0))
    {
        throw NumericalError("partial-transpose symplectic eigenvalue is not positive");
    }
    NegativityResult result;
    result.eta_minus = std::sqrt(eta_sq);
    result.log_negativity = std::max(0.0, -std::log(result.eta_minus));
    return result;
}

} // namespace

NegativityResult log_negativity(const BipartiteCov &cov)
{
    const double det_alice = cov.alice().determinant();
    const double det_bob = cov.bob().determinant();
    const double det_cross = cov.cross().determinant();
    const double sigma_tilde = det_alice + det_bob - 2.0 * det_cross;
    return negativity_from_invariants(sigma_tilde, cov.sigma.determinant());
}

NegativityResult log_negativity_general(double a1, double a2, double a3, double a4)
{
    // Block family alice = a1*I, bob = a2*I, cross = [[a3, a4], [a4, -a3]]:
    // det(cross) = -(a3^2 + a4^2), and the partial-transpose eigenvalue
    // closes to
    //   eta^2 = (S - |a1 + a2| sqrt((a1 - a2)^2 + 4 (a3^2 + a4^2))) / 2,
    //   S = a1^2 + a2^2 + 2 (a3^2 + a4^2).
    const double cross_sq = a3 * a3 + a4 * a4;
    const double sigma_tilde = a1 * a1 + a2 * a2 + 2.0 * cross_sq;
    const double split = std::abs(a1 + a2) *
                         std::sqrt((a1 - a2) * (a1 - a2) + 4.0 * cross_sq);
    const double eta_sq = 0.5 * (sigma_tilde - split);
    if (!(eta_sq > 0.0))
    {
        throw NumericalError("partial-transpose symplectic eigenvalue is not positive");
    }
    NegativityResult result;
    result.eta_minus = std::sqrt(eta_sq);
    result.log_negativity = std::max(0.0, -std::log(result.eta_minus));
    return result;
}

ClosedFormCoefficients closed_form_coefficients(const Cooperativities &coops)
{
    const double c_ab = coops.c_ab;
    const double c_mb = coops.c_mb;
    const double c_mc = coops.c_mc;
    const double x = 1.0 + c_mc;
    const double s = 1.0 + c_mb + c_mc;
    const double e = s - c_ab * x;
    if (!(e > 0.0))
    {
        throw NumericalError("cooperativities beyond the instability boundary "
                             "(c_ab >= 1 + c_mb/(1 + c_mc))");
    }
    ClosedFormCoefficients coeff;
    coeff.c1 = (c_ab * c_ab * x * x + 6.0 * c_ab * x * s + s * s) / (e * e);
    coeff.c2 = (c_ab * c_ab * x * x + s * s -
                2.0 * c_ab * (c_mb - 3.0 * c_mb * c_mc + x * x)) / (e * e);
    coeff.c3 = 4.0 * std::sqrt(c_ab * c_mb * c_mc) *
               (1.0 + c_ab + c_mb + c_mc * (1.0 + c_ab)) / (e * e);
    return coeff;
}

BipartiteCov closed_form_covariance(const Cooperativities &coops)
{
    const ClosedFormCoefficients coeff = closed_form_coefficients(coops);
    BipartiteCov cov;
    cov.sigma.setZero();
    cov.sigma(0, 0) = cov.sigma(1, 1) = coeff.c1;
    cov.sigma(2, 2) = cov.sigma(3, 3) = coeff.c2;
    // Cross correlations in x-p / p-x position: the resonant output
    // correlates the optical amplitude with the microwave phase.
    cov.sigma(0, 3) = cov.sigma(3, 0) = coeff.c3;
    cov.sigma(1, 2) = cov.sigma(2, 1) = coeff.c3;
    return cov;
}

SteeringResult steering(const BipartiteCov &cov)
{
    const double det_sigma = cov.sigma.determinant();
    if (!(det_sigma > 0.0))
    {
        throw NumericalError("bipartite covariance has non-positive determinant");
    }
    const double det_alice = cov.alice().determinant();
    const double det_bob = cov.bob().determinant();
    SteeringResult result;
    result.a_to_c = std::max(0.0, 0.5 * (std::log(det_alice) - std::log(det_sigma)));
    result.c_to_a = std::max(0.0, 0.5 * (std::log(det_bob) - std::log(det_sigma)));
    return result;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd &sigma)
{
    const Eigen::Index dim = sigma.rows();
    if (dim != sigma.cols() || dim % 2 != 0 || dim == 0)
    {
        throw ConfigError("symplectic spectrum needs a square even-dimensional matrix");
    }
    // Moduli of the eigenvalues of i*Omega*sigma; they come in +-nu pairs.
    Eigen::MatrixXcd form = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim / 2; ++k)
    {
        form(2 * k, 2 * k + 1) = std::complex<double>(0.0, 1.0);
        form(2 * k + 1, 2 * k) = std::complex<double>(0.0, -1.0);
    }
    const Eigen::MatrixXcd product = form * sigma.cast<std::complex<double>>();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(product, /*computeEigenvectors=*/false);
    std::vector<double> moduli(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i)
    {
        moduli[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()(i));
    }
    std::sort(moduli.begin(), moduli.end());
    // Each symplectic eigenvalue appears twice.
    std::vector<double> spectrum;
    spectrum.reserve(static_cast<std::size_t>(dim / 2));
    for (std::size_t i = 0; i < moduli.size(); i += 2)
    {
        spectrum.push_back(0.5 * (moduli[i] + moduli[i + 1]));
    }
    return spectrum;
}

BipartiteCov two_mode_squeezed(double r)
{
    const double ch = std::cosh(2.0 * r);
    const double sh = std::sinh(2.0 * r);
    BipartiteCov cov;
    cov.sigma.setIdentity();
    cov.sigma *= ch;
    cov.sigma(0, 2) = cov.sigma(2, 0) = sh;
    cov.sigma(1, 3) = cov.sigma(3, 1) = -sh;
    return cov;
}

} // namespace omchain
