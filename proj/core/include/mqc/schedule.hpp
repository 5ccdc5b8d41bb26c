#pragma once

#include <string>
#include <variant>
#include <vector>

namespace mqc {

enum class PulseModel { ideal, finite };
enum class Axis { x, y };

struct Delay {
    double duration_s = 0.0;
};

// One addressed rotation. The rotation axis lies in the equatorial plane at
// azimuth (axis offset + phase): axis x -> 0, axis y -> pi/2. Ideal pulses
// apply the exact rotation at the pulse centre (free evolution fills the
// duration, which may be zero). Finite pulses drive every site with a global
// field at carrier_rad_s and Rabi frequency rabi_rad_s for duration_s, with
// angle = rabi * duration enforced.
struct Pulse {
    int site = 0;
    Axis axis = Axis::x;
    double angle_rad = 0.0;
    double duration_s = 0.0;
    double rabi_rad_s = 0.0;
    double carrier_rad_s = 0.0; // 0 -> resolve from the model (site resonance)
    double phase_rad = 0.0;
    PulseModel model = PulseModel::ideal;

    double azimuth() const;
    void validate() const;
};

Pulse ideal_pulse(int site, Axis axis, double angle_rad, double duration_s = 0.0);
// Negative angles are folded into the azimuth (R_phi(-a) = R_{phi+pi}(a)).
Pulse finite_pulse(int site, Axis axis, double angle_rad, double rabi_rad_s,
                   double carrier_rad_s = 0.0, double phase_rad = 0.0);

using Event = std::variant<Delay, Pulse>;

struct PulseSchedule {
    std::vector<Event> events;

    double total_time_s() const;
    void validate() const;

    std::string to_json() const;
    static PulseSchedule from_json(const std::string& text);
};

} // namespace mqc
