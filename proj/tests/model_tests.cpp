#include <doctest.h>

#include <cmath>

#include "omchain/model.hpp"

using namespace omchain;

TEST_SUITE("model")
{

TEST_CASE("table1 preset encodes the sphere operating point")
{
    const ChainParams p = table1_preset();
    CHECK(p.a.freq_hz == 2.0e14);
    CHECK(p.a.gamma_hz == 1.0e8);
    CHECK(p.a.kappa_out_hz == 1.0e9);
    CHECK(p.b.freq_hz == 1.0e10);
    CHECK(p.b.gamma_hz == 1.0e3);
    CHECK(p.b.kappa_out_hz == 0.0);
    CHECK(p.m.freq_hz == 1.0e10);
    CHECK(p.m.gamma_hz == 1.0e6);
    CHECK(p.c.freq_hz == 1.0e10);
    CHECK(p.c.gamma_hz == 1.0e6);
    CHECK(p.c.kappa_out_hz == 1.0e8);
    CHECK(p.g_ab_hz == 2.0e5);
    CHECK(p.g_mb_hz == 1.0e7);
    CHECK(p.g_mc_hz == 1.8e8);
    CHECK(p.detuning_hz == 1.0e10);
    REQUIRE(p.drive.alpha.has_value());
    CHECK(*p.drive.alpha == 42.0);
    CHECK_FALSE(p.drive.power_w.has_value());
    CHECK_FALSE(p.temperature_k.has_value());
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("table2 preset encodes the disk operating point")
{
    const ChainParams p = table2_preset();
    CHECK(p.a.freq_hz == 1.935e14);
    CHECK(p.a.gamma_hz == 1.0e9);
    CHECK(p.a.kappa_out_hz == 9.9e10);
    CHECK(p.b.freq_hz == 5.67e8);
    CHECK(p.b.gamma_hz == 5.0e3);
    CHECK(p.m.freq_hz == 5.67e8);
    CHECK(p.m.gamma_hz == 5.0e6);
    CHECK(p.c.freq_hz == 5.67e8);
    CHECK(p.c.gamma_hz == 1.0e4);
    CHECK(p.c.kappa_out_hz == 9.9e5);
    CHECK(p.g_ab_hz == 1.0e3);
    CHECK(p.g_mb_hz == 5.0e6);
    CHECK(p.g_mc_hz == 1.0e7);
    CHECK(p.detuning_hz == 5.67e8);
    REQUIRE(p.drive.alpha.has_value());
    CHECK(*p.drive.alpha == 2.5e4);
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("preset lookup resolves names and rejects unknowns")
{
    CHECK(preset("table1").g_ab_hz == table1_preset().g_ab_hz);
    CHECK(preset("table2").g_ab_hz == table2_preset().g_ab_hz);
    CHECK_THROWS_AS(preset("table3"), ConfigError);
    CHECK_THROWS_AS(preset(""), ConfigError);
}

TEST_CASE("cooperativities of the presets")
{
    const Cooperativities c1 = cooperativities(table1_preset());
    CHECK(c1.c_ab == doctest::Approx(256.58181818181816).epsilon(1e-13));
    CHECK(c1.c_mb == doctest::Approx(400000.0).epsilon(1e-13));
    CHECK(c1.c_mc == doctest::Approx(1283.1683168316831).epsilon(1e-13));

    const Cooperativities c2 = cooperativities(table2_preset());
    CHECK(c2.c_ab == doctest::Approx(5.0).epsilon(1e-13));
    CHECK(c2.c_mb == doctest::Approx(4000.0).epsilon(1e-13));
    CHECK(c2.c_mc == doctest::Approx(80.0).epsilon(1e-13));
}

TEST_CASE("cooperativities are invariant under a common rate and coupling rescale")
{
    ChainParams p = table1_preset();
    const Cooperativities before = cooperativities(p);

    const double s = 7.3;
    for (ModeSpec *mode : {&p.a, &p.b, &p.m, &p.c})
    {
        mode->gamma_hz *= s;
        mode->kappa_out_hz *= s;
    }
    p.g_ab_hz *= s;
    p.g_mb_hz *= s;
    p.g_mc_hz *= s;

    const Cooperativities after = cooperativities(p);
    CHECK(after.c_ab == doctest::Approx(before.c_ab).epsilon(1e-12));
    CHECK(after.c_mb == doctest::Approx(before.c_mb).epsilon(1e-12));
    CHECK(after.c_mc == doctest::Approx(before.c_mc).epsilon(1e-12));
}

TEST_CASE("drive resolution: photon number, enhancement, and power round-trip")
{
    const ChainParams p = table1_preset();
    CHECK(mean_photon_number(p) == doctest::Approx(42.0 * 42.0).epsilon(1e-14));
    CHECK(drive_enhancement(p) == doctest::Approx(42.0).epsilon(1e-14));

    const double power = drive_power_for_enhancement(p, 42.0);
    CHECK(power == doctest::Approx(1.4732492604486452e-4).epsilon(1e-12));

    ChainParams powered = p;
    powered.drive.alpha.reset();
    powered.drive.power_w = power;
    CHECK_NOTHROW(validate(powered));
    CHECK(drive_enhancement(powered) == doctest::Approx(42.0).epsilon(1e-12));

    // Stronger pumping stores more photons.
    ChainParams stronger = powered;
    stronger.drive.power_w = 2.0 * power;
    CHECK(mean_photon_number(stronger) > mean_photon_number(powered));
}

TEST_CASE("thermal occupation follows the Bose-Einstein distribution")
{
    CHECK(thermal_occupation(1.0e10, 0.010) ==
          doctest::Approx(1.4359925012169505e-21).epsilon(1e-12));
    CHECK(thermal_occupation(1.0e10, 290.0) ==
          doctest::Approx(603.7620928560199).epsilon(1e-12));
    CHECK(thermal_occupation(1.0e7, 1.0) ==
          doctest::Approx(2083.161953603149).epsilon(1e-12));

    CHECK(thermal_occupation(1.0e10, 0.0) == 0.0);
    CHECK(thermal_occupation(1.0e10, -1.0) == 0.0);
    CHECK(thermal_occupation(0.0, 1.0) == 0.0);

    // Monotone in temperature, monotone decreasing in frequency.
    CHECK(thermal_occupation(1.0e10, 2.0) > thermal_occupation(1.0e10, 1.0));
    CHECK(thermal_occupation(2.0e10, 1.0) < thermal_occupation(1.0e10, 1.0));
}

TEST_CASE("with_resolved_occupations replaces per-mode n_th at a set temperature")
{
    ChainParams p = table1_preset();
    p.b.n_th = 123.0;  // should be overridden
    p.temperature_k = 0.5;

    const ChainParams resolved = with_resolved_occupations(p);
    CHECK(resolved.a.n_th == doctest::Approx(thermal_occupation(p.a.freq_hz, 0.5)));
    CHECK(resolved.b.n_th == doctest::Approx(thermal_occupation(p.b.freq_hz, 0.5)));
    CHECK(resolved.m.n_th == doctest::Approx(thermal_occupation(p.m.freq_hz, 0.5)));
    CHECK(resolved.c.n_th == doctest::Approx(thermal_occupation(p.c.freq_hz, 0.5)));

    // Without a temperature the explicit occupations pass through untouched.
    ChainParams bare = table1_preset();
    bare.m.n_th = 7.0;
    const ChainParams untouched = with_resolved_occupations(bare);
    CHECK(untouched.m.n_th == 7.0);
}

TEST_CASE("validate rejects inconsistent parameter sets")
{
    const ChainParams good = table1_preset();
    CHECK_NOTHROW(validate(good));

    ChainParams p = good;
    p.b.gamma_hz = -1.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.m.freq_hz = 0.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.a.kappa_out_hz = 0.0;  // detected port removed
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.c.kappa_out_hz = 0.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.drive.power_w = 1.0e-4;  // both drive quantities set
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.drive.alpha.reset();  // no drive at all
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.detuning_hz = 0.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.temperature_k = -0.1;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = good;
    p.g_mb_hz = -5.0;
    CHECK_THROWS_AS(validate(p), ConfigError);
}

TEST_CASE("cooperativity_chain realizes a requested cooperativity triple")
{
    const ChainParams chain = cooperativity_chain(2.0, 3.0, 4.0);
    CHECK_NOTHROW(validate(chain));

    const Cooperativities coops = cooperativities(chain);
    CHECK(coops.c_ab == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(coops.c_mb == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(coops.c_mc == doctest::Approx(4.0).epsilon(1e-12));

    // Idealized realization: lossless ports, cold baths, resonant chain.
    CHECK(chain.a.port_efficiency() == 1.0);
    CHECK(chain.c.port_efficiency() == 1.0);
    CHECK(chain.a.n_th == 0.0);
    CHECK(chain.b.n_th == 0.0);
    CHECK(chain.b.freq_hz == chain.detuning_hz);
    CHECK(chain.m.freq_hz == chain.detuning_hz);
    CHECK(chain.c.freq_hz == chain.detuning_hz);

    // All four total linewidths equal and far below the detuning, so the
    // closed-form regime applies.
    const double rate = chain.a.total_rate_hz();
    CHECK(chain.b.total_rate_hz() == doctest::Approx(rate).epsilon(1e-12));
    CHECK(chain.m.total_rate_hz() == doctest::Approx(rate).epsilon(1e-12));
    CHECK(chain.c.total_rate_hz() == doctest::Approx(rate).epsilon(1e-12));
    CHECK(rate < 1e-6 * chain.detuning_hz);
}

TEST_CASE("port efficiency is the detected fraction of the total linewidth")
{
    const ChainParams p = table1_preset();
    CHECK(p.a.port_efficiency() == doctest::Approx(1.0e9 / 1.1e9).epsilon(1e-14));
    CHECK(p.c.port_efficiency() == doctest::Approx(1.0e8 / 1.01e8).epsilon(1e-14));
    CHECK(p.b.port_efficiency() == 0.0);

    ModeSpec silent;
    CHECK(silent.port_efficiency() == 0.0);
    CHECK(silent.total_rate_hz() == 0.0);
}

} // TEST_SUITE("model")
