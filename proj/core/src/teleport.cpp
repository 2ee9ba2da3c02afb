#include "omchain/teleport.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "omchain/dynamics.hpp"
#include "omchain/errors.hpp"

namespace omchain
{
namespace
{

const Eigen::Matrix2d sigma_z = (Eigen::Matrix2d() << 1.0, 0.0, 0.0, -1.0).finished();

// Local phase-space rotations (one per arm, det +1) that bring the cross
// block of a two-mode covariance to diag(s, -s) with s >= 0: the form in
// which a joint x-measurement and p-measurement see the correlations.
// Physically this is the choice of homodyne local-oscillator phases; being
// local it cannot change the entanglement.
BipartiteCov align_resource(const BipartiteCov &resource)
{
    const Eigen::Matrix2d cross = resource.cross();
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2d rot_a = svd.matrixU().transpose();
    Eigen::Matrix2d rot_c = svd.matrixV().transpose();
    if (rot_a.determinant() < 0.0)
    {
        rot_a.row(1) *= -1.0;
    }
    if (rot_c.determinant() < 0.0)
    {
        rot_c.row(1) *= -1.0;
    }
    Eigen::Matrix4d local = Eigen::Matrix4d::Zero();
    local.topLeftCorner<2, 2>() = rot_a;
    local.bottomRightCorner<2, 2>() = rot_c;

    // The determinant fixes make the aligned cross block diag(s1, -s2) with
    // s1 >= s2 >= 0 whenever det(cross) < 0, which covers every resource
    // that can beat the classical protocol (opposite-sign x-x and p-p
    // correlations are necessary for two-mode Gaussian entanglement). A
    // classically correlated det(cross) >= 0 resource stays at diag(s1, s2);
    // no local rotation can produce the exploitable sign pattern for it.
    BipartiteCov aligned;
    aligned.sigma = local * resource.sigma * local.transpose();
    return aligned;
}

// Measurement algebra of the unit-gain protocol: Gaussian integration of the
// homodyne outcomes in closed form. Returns the output covariance and the
// displacement map acting on the measured amplitudes.
void measurement_algebra(const BipartiteCov &resource, const Eigen::Matrix2d &sigma_in,
                         Eigen::Matrix2d &sigma_out, Eigen::Matrix2d &displacement_map)
{
    // Pivoted LU instead of the fixed-size cofactor inverse: strongly
    // entangled resources are ill-conditioned (smallest eigenvalue ~ the
    // symplectic eigenvalue eta_minus), and the cofactor formula loses
    // ~kappa^2 * epsilon of accuracy where LU loses only ~kappa * epsilon.
    const Eigen::Matrix4d inv_res = resource.sigma.partialPivLu().inverse();
    const Eigen::Matrix2d a2 = inv_res.topLeftCorner<2, 2>();
    const Eigen::Matrix2d a23 = inv_res.topRightCorner<2, 2>();
    const Eigen::Matrix2d a32 = inv_res.bottomLeftCorner<2, 2>();
    const Eigen::Matrix2d a3 = inv_res.bottomRightCorner<2, 2>();
    const Eigen::Matrix2d inv_in = sigma_in.inverse();

    Eigen::Matrix4d mixed;
    mixed.topLeftCorner<2, 2>() = a2 + sigma_z * inv_in * sigma_z;
    mixed.topRightCorner<2, 2>() = sigma_z * inv_in - a23;
    mixed.bottomLeftCorner<2, 2>() = inv_in * sigma_z - a32;
    mixed.bottomRightCorner<2, 2>() = a3 + inv_in;
    const Eigen::Matrix4d inv_mixed = mixed.partialPivLu().inverse();
    const Eigen::Matrix2d b2 = inv_mixed.topLeftCorner<2, 2>();
    const Eigen::Matrix2d b23 = inv_mixed.topRightCorner<2, 2>();
    const Eigen::Matrix2d b32 = inv_mixed.bottomLeftCorner<2, 2>();
    const Eigen::Matrix2d b3 = inv_mixed.bottomRightCorner<2, 2>();

    const Eigen::Matrix2d weight =
        a3 - (a32 * b2 * a23 - a32 * b23 * a3 - a3 * b32 * a23 + a3 * b3 * a3);
    const Eigen::Matrix2d response =
        -2.0 * inv_in * (-sigma_z * b2 * a23 + sigma_z * b23 * a3 - b32 * a23 + b3 * a3);

    sigma_out = weight.inverse();
    displacement_map = -2.0 * weight * response.inverse();
}

} // namespace

double tms_teleport_fidelity(double r_resource, double r_in)
{
    // Unit-gain teleportation over a two-mode squeezed resource adds
    // epsilon = 2 e^{-2r} units of noise to each quadrature before the
    // overlap with the (possibly squeezed) input is taken.
    const double epsilon = 2.0 * std::exp(-2.0 * r_resource);
    return 1.0 / std::sqrt(1.0 + epsilon * std::cosh(2.0 * r_in) +
                           0.25 * epsilon * epsilon);
}

InputState InputState::coherent(const Eigen::Vector2d &mean)
{
    InputState state;
    state.sigma.setIdentity();
    state.mean = mean;
    return state;
}

InputState InputState::squeezed(double r, const Eigen::Vector2d &mean)
{
    InputState state;
    state.sigma.setZero();
    state.sigma(0, 0) = std::exp(2.0 * r);
    state.sigma(1, 1) = std::exp(-2.0 * r);
    state.mean = mean;
    return state;
}

TeleportResult teleport_output(const BipartiteCov &resource, const InputState &input)
{
    const BipartiteCov aligned = align_resource(resource);
    TeleportResult result;
    measurement_algebra(aligned, input.sigma, result.sigma_out, result.displacement_map);
    // Unit gain reproduces the input mean exactly, so the fidelity carries
    // no displacement term.
    result.fidelity = gaussian_fidelity(input.sigma, input.mean, result.sigma_out, input.mean);
    return result;
}

double gaussian_fidelity(const Eigen::Matrix2d &sigma1, const Eigen::Vector2d &mean1,
                         const Eigen::Matrix2d &sigma2, const Eigen::Vector2d &mean2)
{
    const Eigen::Matrix2d total = sigma1 + sigma2;
    const double det = total.determinant();
    if (!(det > 0.0))
    {
        throw NumericalError("sum of covariances is not positive definite");
    }
    const Eigen::Vector2d d = mean2 - mean1;
    const double exponent = -0.5 * d.dot(total.inverse() * d);
    return 2.0 * std::exp(exponent) / std::sqrt(det);
}

double wigner_overlap_fidelity(const Eigen::Matrix2d &sigma1, const Eigen::Vector2d &mean1,
                               const Eigen::Matrix2d &sigma2, const Eigen::Vector2d &mean2,
                               double half_width, int points)
{
    if (points < 3 || half_width <= 0.0)
    {
        throw ConfigError("Wigner grid needs at least 3 points and positive extent");
    }
    const Eigen::Matrix2d inv1 = sigma1.inverse();
    const Eigen::Matrix2d inv2 = sigma2.inverse();
    const double norm1 = 1.0 / (2.0 * std::numbers::pi * std::sqrt(sigma1.determinant()));
    const double norm2 = 1.0 / (2.0 * std::numbers::pi * std::sqrt(sigma2.determinant()));
    const double step = 2.0 * half_width / (points - 1);

    // Trapezoidal weights are uniform except for the boundary rows; the
    // integrand is negligible there by construction, so plain summation with
    // half-weight edges is used.
    double total = 0.0;
    for (int i = 0; i < points; ++i)
    {
        const double x = -half_width + step * i;
        const double wx = (i == 0 || i == points - 1) ? 0.5 : 1.0;
        double row_sum = 0.0;
        for (int j = 0; j < points; ++j)
        {
            const double p = -half_width + step * j;
            const double wp = (j == 0 || j == points - 1) ? 0.5 : 1.0;
            const double dx1 = x - mean1.x();
            const double dp1 = p - mean1.y();
            const double dx2 = x - mean2.x();
            const double dp2 = p - mean2.y();
            const double q1 = inv1(0, 0) * dx1 * dx1 + 2.0 * inv1(0, 1) * dx1 * dp1 +
                              inv1(1, 1) * dp1 * dp1;
            const double q2 = inv2(0, 0) * dx2 * dx2 + 2.0 * inv2(0, 1) * dx2 * dp2 +
                              inv2(1, 1) * dp2 * dp2;
            row_sum += wp * std::exp(-0.5 * (q1 + q2));
        }
        total += wx * row_sum;
    }
    return 4.0 * std::numbers::pi * norm1 * norm2 * total * step * step;
}

std::vector<BenchmarkRow> fidelity_vs_negativity_benchmark(
    const std::vector<double> &r_in_values,
    const std::vector<double> &e_n_values,
    bool with_oracle,
    int jobs)
{
    if (jobs < 1)
    {
        throw ConfigError("jobs must be at least 1");
    }
    std::vector<BenchmarkRow> rows(r_in_values.size() * e_n_values.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&]() {
        while (true)
        {
            const std::size_t index = next.fetch_add(1);
            if (index >= rows.size())
            {
                return;
            }
            const double r_in = r_in_values[index / e_n_values.size()];
            const double e_n = e_n_values[index % e_n_values.size()];
            const double r_resource = 0.5 * e_n;

            BenchmarkRow row;
            row.r_in = r_in;
            row.e_n = e_n;
            row.r_resource = r_resource;
            const InputState input = InputState::squeezed(r_in);
            const TeleportResult tele = teleport_output(two_mode_squeezed(r_resource), input);
            row.f_closed_form = tele.fidelity;
            row.f_oracle = with_oracle
                               ? wigner_overlap_fidelity(input.sigma, input.mean,
                                                         tele.sigma_out, input.mean)
                               : std::numeric_limits<double>::quiet_NaN();
            rows[index] = row;
        }
    };

    if (jobs == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
        {
            pool.emplace_back(worker);
        }
        for (std::thread &thread : pool)
        {
            thread.join();
        }
    }
    return rows;
}

TeleportResult chain_teleport_fidelity(const ChainParams &params,
                                       const InputState &input,
                                       double omega_hz,
                                       double sigma_f_hz)
{
    const DriftModel model = build_drift(params);
    const StabilityReport report = stability(model);
    if (!report.stable)
    {
        throw NumericalError("operating point is unstable; no steady output state");
    }
    const NoiseOccupations noise = NoiseOccupations::for_params(params);
    const OutputCovariance cov = filtered_covariance(model, noise, omega_hz, sigma_f_hz);
    return teleport_output(reduce_bipartite(cov), input);
}

} // namespace omchain
