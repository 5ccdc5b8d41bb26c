#include "mqc/schedule.hpp"

#include "mqc/error.hpp"

#include <doctest/doctest.h>

#include <numbers>

using namespace mqc;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("pulse construction and azimuth")
{
    auto p = ideal_pulse(2, Axis::y, pi, 1e-6);
    CHECK(p.site == 2);
    CHECK(p.angle_rad == pi);
    CHECK(p.duration_s == 1e-6);
    CHECK(p.azimuth() == doctest::Approx(0.5 * pi));
    CHECK(p.model == PulseModel::ideal);

    auto f = finite_pulse(0, Axis::x, pi, 2.0 * pi * 1e4, 1e8, 0.25);
    CHECK(f.duration_s == doctest::Approx(0.5e-4).epsilon(1e-14));
    CHECK(f.azimuth() == doctest::Approx(0.25));
    CHECK(f.carrier_rad_s == 1e8);

    // Negative angles fold into the azimuth: R_phi(-a) = R_{phi+pi}(a).
    auto n = finite_pulse(0, Axis::x, -0.5 * pi, 1e5);
    CHECK(n.angle_rad == doctest::Approx(0.5 * pi));
    CHECK(n.phase_rad == doctest::Approx(pi));
    CHECK(n.duration_s == doctest::Approx(0.5 * pi / 1e5).epsilon(1e-14));
}

TEST_CASE("pulse validation")
{
    CHECK_THROWS_AS(ideal_pulse(-1, Axis::x, pi), ConfigError);
    CHECK_THROWS_AS(ideal_pulse(0, Axis::x, pi, -1e-6), ConfigError);
    CHECK_THROWS_AS(finite_pulse(0, Axis::x, pi, 0.0), ConfigError);
    CHECK_THROWS_AS(finite_pulse(0, Axis::x, pi, -10.0), ConfigError);

    Pulse broken = finite_pulse(0, Axis::x, pi, 1e5);
    broken.duration_s *= 2.0; // angle no longer equals rabi * duration
    CHECK_THROWS_AS(broken.validate(), ConfigError);

    PulseSchedule s;
    s.events.push_back(Delay{-1.0});
    CHECK_THROWS_AS(s.validate(), ConfigError);
}

TEST_CASE("total time sums pulses and delays")
{
    PulseSchedule s;
    s.events.push_back(ideal_pulse(0, Axis::x, pi));
    s.events.push_back(Delay{3e-3});
    s.events.push_back(finite_pulse(1, Axis::y, pi, 1e5));
    s.events.push_back(Delay{2e-3});
    CHECK(s.total_time_s() == doctest::Approx(5e-3 + pi / 1e5).epsilon(1e-14));
}

TEST_CASE("schedule serialization")
{
    PulseSchedule s;
    s.events.push_back(Delay{1.5e-3});
    s.events.push_back(ideal_pulse(1, Axis::y, 0.5 * pi, 2e-6));
    s.events.push_back(finite_pulse(0, Axis::x, pi, 2.0 * pi * 2e4, 1.7e7, -0.3));

    auto back = PulseSchedule::from_json(s.to_json());
    REQUIRE(back.events.size() == 3);
    CHECK(std::get<Delay>(back.events[0]).duration_s == 1.5e-3);

    const auto& p1 = std::get<Pulse>(back.events[1]);
    CHECK(p1.site == 1);
    CHECK(p1.axis == Axis::y);
    CHECK(p1.angle_rad == 0.5 * pi);
    CHECK(p1.duration_s == 2e-6);
    CHECK(p1.model == PulseModel::ideal);

    const auto& p2 = std::get<Pulse>(back.events[2]);
    CHECK(p2.model == PulseModel::finite);
    CHECK(p2.rabi_rad_s == 2.0 * pi * 2e4);
    CHECK(p2.carrier_rad_s == 1.7e7);
    CHECK(p2.phase_rad == -0.3);
    CHECK(p2.duration_s == std::get<Pulse>(s.events[2]).duration_s);
}

TEST_CASE("schedule parse errors")
{
    CHECK_THROWS_AS(PulseSchedule::from_json("nope"), ConfigError);
    CHECK_THROWS_AS(PulseSchedule::from_json("{\"events\": 3}"), ConfigError);
    CHECK_THROWS_AS(PulseSchedule::from_json(R"({"events": [{"type": "nap"}]})"),
                    ConfigError);
    CHECK_THROWS_AS(PulseSchedule::from_json(
                        R"({"events": [{"type": "pulse", "site": 0, "axis": "z",
                             "angle_rad": 1.0}]})"),
                    ConfigError);
    // Round-trip validation catches inconsistent finite pulses.
    CHECK_THROWS_AS(PulseSchedule::from_json(
                        R"({"events": [{"type": "pulse", "site": 0, "axis": "x",
                             "angle_rad": 3.14, "duration_s": 1.0, "rabi_rad_s": 1.0,
                             "model": "finite"}]})"),
                    ConfigError);
}
