#pragma once

#include <string>
#include <vector>

namespace sondlab {

/// Deterministic sinusoidal noise component: amplitude * sin(2*pi*f*t + phase).
struct NoiseSpec {
    double amplitude = 0.0;
    double frequency_hz = 0.0;
    double phase_rad = 0.0;

    void validate() const;
};

/// Benchmark input r(t). The base signal is sin(2*pi*t) for the sinusoid
/// kinds and a constant for `step`.
struct SignalCase {
    enum class Kind { clean, case1, case2, step, custom };

    Kind kind = Kind::clean;
    NoiseSpec noise;           // ignored for clean/step
    double step_value = 1.0;   // step kind only
    std::string label = "clean";

    static SignalCase clean();
    /// sin(2*pi*t) + 0.001 sin(2*pi*10 t): low-frequency, small amplitude.
    static SignalCase case1(double noise_phase_rad = 0.0);
    /// sin(2*pi*t) + 0.1 sin(2*pi*16000 t): high-frequency, large amplitude.
    static SignalCase case2(double noise_phase_rad = 0.0);
    static SignalCase step(double value = 1.0);
    static SignalCase custom(const NoiseSpec& noise);

    /// Parse "clean" / "case1" / "case2" / "step"; throws std::invalid_argument.
    static SignalCase from_label(const std::string& label, double noise_phase_rad = 0.0);
};

/// r(t) for the given case.
double test_input(const SignalCase& c, double t);

/// Derivative of the clean base signal of `c` (0 for step).
double case_reference_derivative(const SignalCase& c, double t);

/// d/dt sin(2*pi*t) = 2*pi*cos(2*pi*t), the benchmark ground truth.
double reference_derivative(double t);

/// Angular-velocity step reference: 1 rad/s from t = 0 on.
double step_reference(double t);

/// Piecewise-constant external torque events (time, torque), sorted by time.
struct DisturbanceSchedule {
    struct Event {
        double time_s = 0.0;
        double torque_nm = 0.0;
    };
    std::vector<Event> events;

    void validate() const;  // times must be non-decreasing
};

/// Torque of the latest event with time <= t, else 0.
double external_torque(const DisturbanceSchedule& schedule, double t);

}  // namespace sondlab
