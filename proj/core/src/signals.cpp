#include "sondlab/signals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sondlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void NoiseSpec::validate() const {
    if (!(amplitude >= 0.0)) throw std::invalid_argument("NoiseSpec: amplitude must be >= 0");
    if (!(frequency_hz >= 0.0)) throw std::invalid_argument("NoiseSpec: frequency must be >= 0");
}

SignalCase SignalCase::clean() {
    return SignalCase{Kind::clean, {}, 1.0, "clean"};
}

SignalCase SignalCase::case1(double noise_phase_rad) {
    return SignalCase{Kind::case1, {0.001, 10.0, noise_phase_rad}, 1.0, "case1"};
}

SignalCase SignalCase::case2(double noise_phase_rad) {
    return SignalCase{Kind::case2, {0.1, 16000.0, noise_phase_rad}, 1.0, "case2"};
}

SignalCase SignalCase::step(double value) {
    return SignalCase{Kind::step, {}, value, "step"};
}

SignalCase SignalCase::custom(const NoiseSpec& noise) {
    noise.validate();
    return SignalCase{Kind::custom, noise, 1.0, "custom"};
}

SignalCase SignalCase::from_label(const std::string& label, double noise_phase_rad) {
    if (label == "clean") return clean();
    if (label == "case1") return case1(noise_phase_rad);
    if (label == "case2") return case2(noise_phase_rad);
    if (label == "step") return step();
    throw std::invalid_argument("unknown signal case '" + label + "'");
}

double test_input(const SignalCase& c, double t) {
    switch (c.kind) {
        case SignalCase::Kind::step:
            return c.step_value;
        case SignalCase::Kind::clean:
            return std::sin(kTwoPi * t);
        default:
            return std::sin(kTwoPi * t) +
                   c.noise.amplitude *
                       std::sin(kTwoPi * c.noise.frequency_hz * t + c.noise.phase_rad);
    }
}

double case_reference_derivative(const SignalCase& c, double t) {
    if (c.kind == SignalCase::Kind::step) return 0.0;
    return reference_derivative(t);
}

double reference_derivative(double t) {
    return kTwoPi * std::cos(kTwoPi * t);
}

double step_reference(double /*t*/) {
    return 1.0;
}

void DisturbanceSchedule::validate() const {
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].time_s < events[i - 1].time_s)
            throw std::invalid_argument("DisturbanceSchedule: event times must be non-decreasing");
    }
}

double external_torque(const DisturbanceSchedule& schedule, double t) {
    double torque = 0.0;
    for (const auto& ev : schedule.events) {
        if (ev.time_s <= t) torque = ev.torque_nm;
        else break;
    }
    return torque;
}

}  // namespace sondlab
