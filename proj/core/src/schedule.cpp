#include "mqc/schedule.hpp"

#include "mqc/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>

namespace mqc {

namespace {
using nlohmann::json;
constexpr double pi = std::numbers::pi;
} // namespace

double Pulse::azimuth() const
{
    return (axis == Axis::x ? 0.0 : 0.5 * pi) + phase_rad;
}

void Pulse::validate() const
{
    if (site < 0)
        throw ConfigError("pulse site must be non-negative");
    if (duration_s < 0.0)
        throw ConfigError("pulse duration must be non-negative");
    if (model == PulseModel::finite) {
        if (!(rabi_rad_s > 0.0))
            throw ConfigError("finite pulse needs a positive Rabi frequency");
        if (angle_rad < 0.0)
            throw ConfigError("finite pulse angle must be non-negative (fold sign into phase)");
        double expect = rabi_rad_s * duration_s;
        if (std::abs(angle_rad - expect) > 1e-9 * std::max(1.0, std::abs(angle_rad)))
            throw ConfigError("finite pulse must satisfy angle = rabi * duration");
    }
}

Pulse ideal_pulse(int site, Axis axis, double angle_rad, double duration_s)
{
    Pulse p;
    p.site = site;
    p.axis = axis;
    p.angle_rad = angle_rad;
    p.duration_s = duration_s;
    p.model = PulseModel::ideal;
    p.validate();
    return p;
}

Pulse finite_pulse(int site, Axis axis, double angle_rad, double rabi_rad_s,
                   double carrier_rad_s, double phase_rad)
{
    Pulse p;
    p.site = site;
    p.axis = axis;
    p.angle_rad = angle_rad;
    p.rabi_rad_s = rabi_rad_s;
    p.carrier_rad_s = carrier_rad_s;
    p.phase_rad = phase_rad;
    p.model = PulseModel::finite;
    if (p.angle_rad < 0.0) {
        p.angle_rad = -p.angle_rad;
        p.phase_rad += pi;
    }
    p.duration_s = p.angle_rad / rabi_rad_s;
    p.validate();
    return p;
}

double PulseSchedule::total_time_s() const
{
    double t = 0.0;
    for (const auto& ev : events) {
        if (std::holds_alternative<Delay>(ev))
            t += std::get<Delay>(ev).duration_s;
        else
            t += std::get<Pulse>(ev).duration_s;
    }
    return t;
}

void PulseSchedule::validate() const
{
    for (const auto& ev : events) {
        if (std::holds_alternative<Delay>(ev)) {
            if (std::get<Delay>(ev).duration_s < 0.0)
                throw ConfigError("delay duration must be non-negative");
        } else {
            std::get<Pulse>(ev).validate();
        }
    }
}

std::string PulseSchedule::to_json() const
{
    json events_j = json::array();
    for (const auto& ev : events) {
        if (std::holds_alternative<Delay>(ev)) {
            const auto& d = std::get<Delay>(ev);
            events_j.push_back({{"type", "delay"}, {"duration_s", d.duration_s}});
        } else {
            const auto& p = std::get<Pulse>(ev);
            events_j.push_back({{"type", "pulse"},
                                {"site", p.site},
                                {"axis", p.axis == Axis::x ? "x" : "y"},
                                {"angle_rad", p.angle_rad},
                                {"duration_s", p.duration_s},
                                {"rabi_rad_s", p.rabi_rad_s},
                                {"carrier_rad_s", p.carrier_rad_s},
                                {"phase_rad", p.phase_rad},
                                {"model", p.model == PulseModel::ideal ? "ideal" : "finite"}});
        }
    }
    json j;
    j["events"] = events_j;
    return j.dump(2);
}

PulseSchedule PulseSchedule::from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad schedule json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
        throw ConfigError("schedule json needs an 'events' array");

    PulseSchedule s;
    try {
        for (const auto& ev : j["events"]) {
            std::string type = ev.at("type").get<std::string>();
            if (type == "delay") {
                s.events.push_back(Delay{ev.at("duration_s").get<double>()});
            } else if (type == "pulse") {
                Pulse p;
                p.site = ev.at("site").get<int>();
                std::string axis = ev.at("axis").get<std::string>();
                if (axis != "x" && axis != "y")
                    throw ConfigError("pulse axis must be 'x' or 'y'");
                p.axis = axis == "x" ? Axis::x : Axis::y;
                p.angle_rad = ev.at("angle_rad").get<double>();
                p.duration_s = ev.value("duration_s", 0.0);
                p.rabi_rad_s = ev.value("rabi_rad_s", 0.0);
                p.carrier_rad_s = ev.value("carrier_rad_s", 0.0);
                p.phase_rad = ev.value("phase_rad", 0.0);
                std::string model = ev.value("model", "ideal");
                if (model != "ideal" && model != "finite")
                    throw ConfigError("pulse model must be 'ideal' or 'finite'");
                p.model = model == "ideal" ? PulseModel::ideal : PulseModel::finite;
                s.events.push_back(p);
            } else {
                throw ConfigError("unknown event type '" + type + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad schedule json: ") + e.what());
    }
    s.validate();
    return s;
}

} // namespace mqc
