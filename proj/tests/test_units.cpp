#include "mqc/units.hpp"

#include "mqc/constants.hpp"
#include "mqc/error.hpp"

#include <doctest/doctest.h>

#include <numbers>

using namespace mqc;
using units::Dim;

TEST_CASE("frozen anchor conversions")
{
    // Independently derived from CODATA 2018 constants.
    CHECK(units::value_in(units::make(1.0, "hartree"), "Hz")
          == doctest::Approx(6579683920710343.0).epsilon(1e-13));
    CHECK(units::value_in(units::make(1.0, "hartree"), "K")
          == doctest::Approx(315775.02480406675).epsilon(1e-13));
    CHECK(units::make(1.0, "K").au == doctest::Approx(3.166811563455608e-06).epsilon(1e-13));
    CHECK(units::make(0.4, "mK").au
          == doctest::Approx(1.2667246253822432e-09).epsilon(1e-13));
    CHECK(units::make(1.0, "T").au == doctest::Approx(4.2543821573135943e-06).epsilon(1e-13));
    CHECK(units::make(1.0, "G").au == doctest::Approx(4.2543821573135943e-10).epsilon(1e-13));
    CHECK(units::make(1.0, "T/m").au
          == doctest::Approx(2.2513220841226963e-16).epsilon(1e-13));
    CHECK(units::make(20.0, "G/cm").au
          == doctest::Approx(4.5026441682453925e-17).epsilon(1e-13));
    CHECK(units::make(1.0, "T^2/Hz").au
          == doctest::Approx(748269.24719423673).epsilon(1e-13));
    CHECK(units::make(1.0, "T/sqrtHz").au
          == doctest::Approx(865.02557603474168).epsilon(1e-13));
    CHECK(units::make(250.0, "nm").au
          == doctest::Approx(4724.3153115644254).epsilon(1e-13));
    CHECK(units::make(22.98976928, "u").au
          == doctest::Approx(41907.785721113374).epsilon(1e-12));
    CHECK(units::value_in(units::make(1.0, "GHz"), "Hz") == doctest::Approx(1e9));
    CHECK(units::value_in(units::make(2.0 * std::numbers::pi, "rad/s"), "Hz")
          == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(units::make(1.0, "s").au * consts::atomic_time_s == doctest::Approx(1.0));
}

TEST_CASE("dimension bookkeeping")
{
    CHECK(units::unit_dim("mK") == Dim::energy);
    CHECK(units::unit_dim("rad/s") == Dim::frequency);
    CHECK(units::unit_dim("G/cm") == Dim::field_gradient);
    CHECK(units::unit_dim("G^2/Hz") == Dim::noise_psd);
    CHECK(units::known_unit("uT"));
    CHECK_FALSE(units::known_unit("furlong"));

    CHECK(units::convertible(Dim::frequency, Dim::energy));
    CHECK(units::convertible(Dim::energy, Dim::frequency));
    CHECK(units::convertible(Dim::time, Dim::time));
    CHECK_FALSE(units::convertible(Dim::time, Dim::energy));
    CHECK_FALSE(units::convertible(Dim::magnetic_field, Dim::field_gradient));
}

TEST_CASE("parsing and error paths")
{
    auto q = units::parse("0.4 mK");
    CHECK(q.dim == Dim::energy);
    CHECK(q.au == doctest::Approx(1.2667246253822432e-09).epsilon(1e-13));

    CHECK(units::parse("250nm").au == doctest::Approx(4724.3153115644254).epsilon(1e-13));
    CHECK(units::parse("7").dim == Dim::dimensionless);
    CHECK(units::parse("7").au == 7.0);
    CHECK(units::parse("-1.5e-3 T").au
          == doctest::Approx(-1.5e-3 * 4.2543821573135943e-06).epsilon(1e-13));

    CHECK_THROWS_AS(units::parse("abc"), ConfigError);
    CHECK_THROWS_AS(units::parse(""), ConfigError);
    CHECK_THROWS_AS(units::parse("1 2 mK"), UnitError);
    CHECK_THROWS_AS(units::parse("1 furlong"), UnitError);
    CHECK_THROWS_AS(units::make(1.0, "furlong"), UnitError);

    // Frequencies pass as energies through hbar = 1, nothing else crosses.
    auto e = units::parse_as("40 Hz", Dim::energy);
    CHECK(e.dim == Dim::energy);
    CHECK(e.au == doctest::Approx(40.0 / 6579683920710343.0).epsilon(1e-13));
    CHECK_NOTHROW(units::parse_as("10 s", Dim::time));
    CHECK_THROWS_AS(units::parse_as("10 s", Dim::energy), UnitError);
    CHECK_THROWS_AS(units::parse_as("1 G", Dim::noise_asd), UnitError);

    CHECK_THROWS_AS(units::value_in(units::make(1.0, "T"), "s"), UnitError);
    CHECK(units::value_in(units::parse_as("1 uK", Dim::energy), "kHz")
          == doctest::Approx(1e-6 * 3.166811563455608e-06 * 6579683920710343.0 / 1e3)
                 .epsilon(1e-12));
}
