#include "sondlab/differentiators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sondlab/presets.hpp"

namespace sondlab {

namespace {

double sign0(double v) {
    if (v > 0.0) return 1.0;
    if (v < 0.0) return -1.0;
    return 0.0;
}

}  // namespace

HgtdParams::HgtdParams(double a1_, double a2_, double tau_)
    : a1(a1_), a2(a2_), tau(tau_) {
    if (!(tau > 0.0)) throw std::invalid_argument("HgtdParams: tau must be > 0");
}

StatePair hgtd_dynamics(const StatePair& x, double r, const HgtdParams& p) {
    if (!std::isfinite(x.x1) || !std::isfinite(x.x2) || !std::isfinite(r))
        throw std::domain_error("hgtd_dynamics: non-finite input");
    const double innovation = r - x.x1;
    return {x.x2 + (p.a1 / p.tau) * innovation,
            (p.a2 / (p.tau * p.tau)) * innovation};
}

RedParams::RedParams(double c2_, double lambda1_, double lambda2_)
    : c2(c2_), lambda1(lambda1_), lambda2(lambda2_) {
    if (!(c2 > 0.0)) throw std::invalid_argument("RedParams: c2 must be > 0");
    if (!(lambda1 > 0.0)) throw std::invalid_argument("RedParams: lambda1 must be > 0");
    if (!(lambda2 > 0.0)) throw std::invalid_argument("RedParams: lambda2 must be > 0");
}

StatePair red_dynamics(const StatePair& x, double r, const RedParams& p) {
    const double s = x.x1 - r;
    return {x.x2 - p.lambda1 * std::sqrt(std::fabs(s)) * sign0(s),
            -p.lambda2 * sign0(s)};
}

DifferentiatorModel make_sond_model(const SondParams& p, std::string label) {
    DifferentiatorModel m;
    m.label = std::move(label);
    m.state_dim = 2;
    m.dynamics = [p](double, const State& x, double r, State& dxdt) {
        const StatePair d = sond_dynamics({x[0], x[1]}, r, p);
        dxdt[0] = d.x1;
        dxdt[1] = d.x2;
    };
    m.output = [p](const State& x) { return sond_output({x[0], x[1]}, p); };
    return m;
}

DifferentiatorModel make_hgtd_model(const HgtdParams& p, std::string label) {
    DifferentiatorModel m;
    m.label = std::move(label);
    m.state_dim = 2;
    m.dynamics = [p](double, const State& x, double r, State& dxdt) {
        const StatePair d = hgtd_dynamics({x[0], x[1]}, r, p);
        dxdt[0] = d.x1;
        dxdt[1] = d.x2;
    };
    m.output = [](const State& x) { return StatePair{x[0], x[1]}; };
    return m;
}

DifferentiatorModel make_red_model(const RedParams& p, std::string label) {
    DifferentiatorModel m;
    m.label = std::move(label);
    m.state_dim = 2;
    m.dynamics = [p](double, const State& x, double r, State& dxdt) {
        const StatePair d = red_dynamics({x[0], x[1]}, r, p);
        dxdt[0] = d.x1;
        dxdt[1] = d.x2;
    };
    m.output = [](const State& x) { return StatePair{x[0], x[1]}; };
    return m;
}

ModelRegistry ModelRegistry::with_builtins() {
    ModelRegistry reg;
    reg.register_model("sond", [] { return make_sond_model(presets::sond_case1()); });
    reg.register_model("hgtd", [] { return make_hgtd_model(presets::hgtd_table1()); });
    reg.register_model("red", [] { return make_red_model(presets::red_table1()); });
    return reg;
}

void ModelRegistry::register_model(const std::string& label, Factory factory) {
    factories_[label] = std::move(factory);
}

bool ModelRegistry::contains(const std::string& label) const {
    return factories_.count(label) != 0;
}

DifferentiatorModel ModelRegistry::make(const std::string& label) const {
    auto it = factories_.find(label);
    if (it != factories_.end()) return it->second();
    if (label == "hcnd" || label == "rcnd" || label == "reucaod")
        throw std::invalid_argument(
            "differentiator '" + label +
            "': parameters are recorded but the dynamics are plugin-only; "
            "register a model for this label first");
    throw std::invalid_argument("unknown differentiator '" + label + "'");
}

std::vector<std::string> ModelRegistry::labels() const {
    std::vector<std::string> out;
    out.reserve(factories_.size());
    for (const auto& [label, _] : factories_) out.push_back(label);
    return out;
}

Trajectory simulate_differentiator(const DifferentiatorModel& model,
                                   const SignalCase& signal,
                                   const IntegratorConfig& cfg) {
    if (cfg.initial_state.size() != model.state_dim)
        throw std::invalid_argument("simulate_differentiator: initial state dimension != " +
                                    std::to_string(model.state_dim));

    VectorField field = [&model, &signal](double t, const State& x, State& dxdt) {
        model.dynamics(t, x, test_input(signal, t), dxdt);
    };

    const std::vector<Tap> taps = {
        {"r", [&signal](double t, const State&) { return test_input(signal, t); }},
        {"r_hat", [&model](double, const State& x) { return model.output(x).x1; }},
        {"dr_hat", [&model](double, const State& x) { return model.output(x).x2; }},
        {"ref_deriv",
         [&signal](double t, const State&) { return case_reference_derivative(signal, t); }},
        {"e",
         [&model, &signal](double t, const State& x) {
             return case_reference_derivative(signal, t) - model.output(x).x2;
         }},
    };
    return integrate(field, cfg, taps);
}

}  // namespace sondlab
