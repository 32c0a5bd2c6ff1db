#include "sondlab/ode.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sondlab {

namespace {

std::string describe(double t, std::size_t channel, const std::string& detail) {
    std::ostringstream os;
    os << "integration diverged at t=" << t << " (state channel " << channel
       << "): " << detail;
    return os.str();
}

// Index of the first non-finite entry, or npos.
std::size_t first_bad(const State& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) return i;
    }
    return std::string::npos;
}

}  // namespace

IntegrationError::IntegrationError(double t, std::size_t channel,
                                   const std::string& what_happened)
    : std::runtime_error(describe(t, channel, what_happened)), t_(t), channel_(channel) {}

void IntegratorConfig::validate() const {
    if (!(h > 0.0)) throw std::invalid_argument("IntegratorConfig: h must be > 0");
    if (!(tf > t0)) throw std::invalid_argument("IntegratorConfig: tf must be > t0");
    if (initial_state.empty())
        throw std::invalid_argument("IntegratorConfig: initial_state must have dimension >= 1");
    if (first_bad(initial_state) != std::string::npos)
        throw std::invalid_argument("IntegratorConfig: initial_state has non-finite entries");
    const double ratio = (tf - t0) / h;
    if (!(ratio < 9.0e15))
        throw std::invalid_argument("IntegratorConfig: sample count not representable");
}

std::int64_t IntegratorConfig::step_count() const {
    // Nudge before flooring so 999.9999999999999 counts as 1000 steps.
    const double ratio = (tf - t0) / h;
    return static_cast<std::int64_t>(std::floor(ratio * (1.0 + 1e-12) + 1e-9));
}

const std::vector<double>& Trajectory::channel(const std::string& name) const {
    for (std::size_t i = 0; i < channel_names.size(); ++i) {
        if (channel_names[i] == name) return channels[i];
    }
    throw std::out_of_range("Trajectory: no channel named '" + name + "'");
}

bool Trajectory::has_channel(const std::string& name) const noexcept {
    for (const auto& n : channel_names) {
        if (n == name) return true;
    }
    return false;
}

Rk4Stepper::Rk4Stepper(std::size_t dim)
    : k1_(dim), k2_(dim), k3_(dim), k4_(dim), tmp_(dim) {}

void Rk4Stepper::step(const VectorField& f, double t, State& x, double h) {
    const std::size_t n = x.size();
    if (n != tmp_.size())
        throw std::invalid_argument("Rk4Stepper: state dimension mismatch");
    const double h2 = h / 2.0;

    auto check_stage = [&](const State& k, double stage_t) {
        if (k.size() != n)
            throw std::invalid_argument("Rk4Stepper: vector field changed dimension");
        const std::size_t bad = first_bad(k);
        if (bad != std::string::npos)
            throw IntegrationError(stage_t, bad, "non-finite stage derivative");
    };

    f(t, x, k1_);
    check_stage(k1_, t);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + h2 * k1_[i];
    f(t + h2, tmp_, k2_);
    check_stage(k2_, t + h2);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + h2 * k2_[i];
    f(t + h2, tmp_, k3_);
    check_stage(k3_, t + h2);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + h * k3_[i];
    f(t + h, tmp_, k4_);
    check_stage(k4_, t + h);

    for (std::size_t i = 0; i < n; ++i)
        x[i] += (h / 6.0) * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
}

State rk4_step(const VectorField& f, double t, const State& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("rk4_step: h must be > 0");
    State out = x;
    Rk4Stepper stepper(x.size());
    stepper.step(f, t, out, h);
    return out;
}

Trajectory integrate(const VectorField& f, const IntegratorConfig& cfg,
                     std::span<const Tap> taps) {
    cfg.validate();
    const std::int64_t n_steps = cfg.step_count();
    const std::size_t n_samples = static_cast<std::size_t>(n_steps) + 1;

    Trajectory traj;
    traj.times.reserve(n_samples);
    traj.states.reserve(n_samples);
    traj.channel_names.reserve(taps.size());
    traj.channels.resize(taps.size());
    for (const auto& tap : taps) {
        traj.channel_names.push_back(tap.name);
    }
    for (auto& col : traj.channels) col.reserve(n_samples);

    State x = cfg.initial_state;
    {
        // Probe once so a dimension mismatch surfaces before stepping.
        State probe(x.size());
        f(cfg.t0, x, probe);
        if (probe.size() != x.size())
            throw std::invalid_argument("integrate: field dimension != initial_state dimension");
    }

    Rk4Stepper stepper(x.size());
    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back(x);
        for (std::size_t i = 0; i < taps.size(); ++i)
            traj.channels[i].push_back(taps[i].fn(t, x));
    };

    record(cfg.t0);
    for (std::int64_t k = 0; k < n_steps; ++k) {
        const double t = cfg.t0 + static_cast<double>(k) * cfg.h;
        stepper.step(f, t, x, cfg.h);
        const std::size_t bad = first_bad(x);
        if (bad != std::string::npos)
            throw IntegrationError(t + cfg.h, bad, "non-finite state after step");
        record(cfg.t0 + static_cast<double>(k + 1) * cfg.h);
    }
    return traj;
}

}  // namespace sondlab
