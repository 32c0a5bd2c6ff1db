#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sondlab {

/// Dense state vector. Dimension is fixed for the life of a simulation.
using State = std::vector<double>;

/// Right-hand side f(t, x) -> dx/dt, written into `dxdt` (same dimension as x).
using VectorField = std::function<void(double t, const State& x, State& dxdt)>;

/// Thrown when a stage evaluation or a state entry stops being finite.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(double t, std::size_t channel, const std::string& what_happened);

    double time() const noexcept { return t_; }
    std::size_t channel() const noexcept { return channel_; }

private:
    double t_;
    std::size_t channel_;
};

struct IntegratorConfig {
    double t0 = 0.0;
    double tf = 0.0;
    double h = 0.0;
    State initial_state;

    /// Throws std::invalid_argument unless h > 0, tf > t0, the state is
    /// non-empty and finite, and the sample count is representable.
    void validate() const;

    /// floor((tf - t0)/h) robustly: an integral ratio perturbed by roundoff
    /// still maps to the exact integer step count.
    std::int64_t step_count() const;
};

/// Uniformly sampled result of a run. `times[k] = t0 + k*h` by construction.
/// Channels are extra per-sample scalar outputs, in registration order.
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<std::string> channel_names;
    std::vector<std::vector<double>> channels;

    std::size_t size() const noexcept { return times.size(); }
    /// Lookup by name; throws std::out_of_range for unknown channels.
    const std::vector<double>& channel(const std::string& name) const;
    bool has_channel(const std::string& name) const noexcept;
};

/// Per-sample scalar extractor attached to integrate().
struct Tap {
    std::string name;
    std::function<double(double t, const State& x)> fn;
};

/// Classical fixed-step RK4 with reusable stage workspace.
class Rk4Stepper {
public:
    explicit Rk4Stepper(std::size_t dim);

    /// Advance x from t to t+h in place. Stage times are t, t+h/2, t+h/2,
    /// t+h, so time-dependent inputs are sampled as continuous signals.
    void step(const VectorField& f, double t, State& x, double h);

private:
    State k1_, k2_, k3_, k4_, tmp_;
};

/// Single RK4 step, value-returning form.
State rk4_step(const VectorField& f, double t, const State& x, double h);

/// Integrate cfg.initial_state over [t0, tf] at fixed step h and sample
/// every step. Sample times are generated as t0 + k*h, never accumulated.
Trajectory integrate(const VectorField& f, const IntegratorConfig& cfg,
                     std::span<const Tap> taps = {});

}  // namespace sondlab
