#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "omchain/dynamics.hpp"

using namespace omchain;

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;
} // namespace

TEST_SUITE("dynamics")
{

TEST_CASE("drift diagonal carries detuning and half linewidth per operator pair")
{
    const ChainParams p = table1_preset();
    const DriftModel model = build_drift(p);

    // Creation and annihilation rows of one mode are complex conjugates.
    CHECK(model.drift(0, 0) == std::conj(model.drift(1, 1)));
    CHECK(model.drift(2, 2) == std::conj(model.drift(3, 3)));
    CHECK(model.drift(6, 6) == std::conj(model.drift(7, 7)));

    CHECK(model.drift(0, 0).real() ==
          doctest::Approx(-0.5 * two_pi * 1.1e9).epsilon(1e-14));
    CHECK(std::abs(model.drift(0, 0).imag()) ==
          doctest::Approx(two_pi * 1.0e10).epsilon(1e-14));

    CHECK(model.rate_scale == doctest::Approx(two_pi * 1.1e9).epsilon(1e-14));
}

TEST_CASE("noise rows recover each mode's total damping rate")
{
    const ChainParams p = table1_preset();
    const DriftModel model = build_drift(p);

    const std::array<double, 4> totals = {p.a.total_rate_hz(), p.b.total_rate_hz(),
                                          p.m.total_rate_hz(), p.c.total_rate_hz()};
    for (int mode = 0; mode < 4; ++mode)
    {
        for (int row = 2 * mode; row < 2 * mode + 2; ++row)
        {
            const double sum = model.input_map.row(row).squaredNorm();
            CHECK(sum == doctest::Approx(two_pi * totals[static_cast<std::size_t>(mode)])
                             .epsilon(1e-12));
        }
    }
}

TEST_CASE("spectrum comes in conjugate pairs")
{
    const StabilityReport report = stability(build_drift(table1_preset()));

    std::array<std::complex<double>, 8> eigs = report.eigenvalues;
    std::array<std::complex<double>, 8> conj{};
    for (std::size_t i = 0; i < 8; ++i)
    {
        conj[i] = std::conj(eigs[i]);
    }
    const auto order = [](const std::complex<double> &x, const std::complex<double> &y) {
        if (x.real() != y.real())
        {
            return x.real() < y.real();
        }
        return x.imag() < y.imag();
    };
    std::sort(eigs.begin(), eigs.end(), order);
    std::sort(conj.begin(), conj.end(), order);
    for (std::size_t i = 0; i < 8; ++i)
    {
        CHECK(std::abs(eigs[i] - conj[i]) <= 1e-6 * std::abs(eigs[i]));
    }
}

TEST_CASE("decoupled chain decays at half the smallest linewidth")
{
    ChainParams p = table1_preset();
    p.g_ab_hz = 0.0;
    p.g_mb_hz = 0.0;
    p.g_mc_hz = 0.0;

    const StabilityReport report = stability(build_drift(p));
    CHECK(report.stable);
    // Slowest decay: the phonon mode at gamma_b / 2.
    CHECK(report.margin == doctest::Approx(0.5 * two_pi * 1.0e3).epsilon(1e-12));
}

TEST_CASE("counter-rotating terms vanish with the magnon couplings")
{
    ChainParams p = table1_preset();
    p.g_mb_hz = 0.0;
    p.g_mc_hz = 0.0;

    const DriftModel rwa = build_drift(p, true);
    const DriftModel full = build_drift(p, false);
    CHECK((rwa.drift - full.drift).cwiseAbs().maxCoeff() == 0.0);

    // With the couplings on, the two pictures genuinely differ.
    const DriftModel rwa_t1 = build_drift(table1_preset(), true);
    const DriftModel full_t1 = build_drift(table1_preset(), false);
    CHECK((rwa_t1.drift - full_t1.drift).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("sphere operating point is stable with its known margin")
{
    const StabilityReport report = stability(build_drift(table1_preset()));
    CHECK(report.stable);
    CHECK(report.margin / two_pi ==
          doctest::Approx(27962.983220293438).epsilon(1e-9));
}

TEST_CASE("overdriving destabilizes the chain")
{
    ChainParams p = table1_preset();
    p.drive.alpha = 60.0;  // past the instability boundary
    const StabilityReport report = stability(build_drift(p));
    CHECK_FALSE(report.stable);
    CHECK(report.margin < 0.0);
}

TEST_CASE("hybrid modes of the undriven subsystem")
{
    const std::array<HybridMode, 3> modes = hybrid_mode_frequencies(table1_preset());

    CHECK(modes[0].freq_hz == doctest::Approx(9821475329.409885).epsilon(1e-9));
    CHECK(modes[1].freq_hz == doctest::Approx(1.0e10).epsilon(1e-9));
    CHECK(modes[2].freq_hz == doctest::Approx(10178524670.590124).epsilon(1e-9));
    CHECK(modes[0].linewidth_hz == doctest::Approx(50844699.72660135).epsilon(1e-6));
    CHECK(modes[1].linewidth_hz == doctest::Approx(311600.546797464).epsilon(1e-6));
    CHECK(modes[2].linewidth_hz == doctest::Approx(50844699.7266005).epsilon(1e-6));

    // Sorted ascending, split by about twice the magnon-microwave coupling.
    CHECK(modes[0].freq_hz < modes[1].freq_hz);
    CHECK(modes[1].freq_hz < modes[2].freq_hz);
    const double split = modes[2].freq_hz - modes[0].freq_hz;
    CHECK(split == doctest::Approx(2.0 * 1.8e8).epsilon(1e-2));

    // The hybrid structure belongs to the undriven subsystem: the optical
    // drive strength must not enter.
    ChainParams p = table1_preset();
    p.drive.alpha = 99.0;
    const std::array<HybridMode, 3> driven = hybrid_mode_frequencies(p);
    CHECK(driven[0].freq_hz == modes[0].freq_hz);
    CHECK(driven[2].linewidth_hz == modes[2].linewidth_hz);
}

} // TEST_SUITE("dynamics")
