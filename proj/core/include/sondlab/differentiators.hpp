#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sondlab/ode.hpp"
#include "sondlab/signals.hpp"
#include "sondlab/sond.hpp"

namespace sondlab {

/// A second-order-or-higher tracking differentiator behind a uniform
/// interface: dynamics driven by the input sample r(t), plus an output map
/// from internal state to (signal estimate, derivative estimate).
struct DifferentiatorModel {
    std::string label;
    std::size_t state_dim = 2;
    /// (t, state, r) -> state derivative, written into dxdt.
    std::function<void(double t, const State& x, double r, State& dxdt)> dynamics;
    /// state -> (r_hat, dr_hat)
    std::function<StatePair(const State& x)> output;
};

/// High-gain differentiator gains; the observer form
///   dx1 = x2 + (a1/tau)(r - x1),  dx2 = (a2/tau^2)(r - x1)
struct HgtdParams {
    double a1;
    double a2;
    double tau;

    HgtdParams(double a1, double a2, double tau);
};

StatePair hgtd_dynamics(const StatePair& x, double r, const HgtdParams& p);

/// Super-twisting robust exact differentiator with sign(0) = 0:
///   dx1 = x2 - lambda1 |x1 - r|^{1/2} sign(x1 - r)
///   dx2 = -lambda2 sign(x1 - r)
struct RedParams {
    double c2;       // Lipschitz bound the gains were tuned for
    double lambda1;  // ~ 1.5 sqrt(c2)
    double lambda2;  // ~ 1.1 c2

    RedParams(double c2, double lambda1, double lambda2);
};

StatePair red_dynamics(const StatePair& x, double r, const RedParams& p);

// Parameter records for differentiators whose dynamics live in external
// plugins. Kept so published comparison setups stay loadable.
struct HcndParams {
    double k1, k2, k3, k4, alpha;
};
struct RcndParams {
    double epsilon, alpha, a10, a11, a20, a21;
};
struct ReucaodParams {
    double c2, k1, k2, kappa1, kappa2, alpha, Tu;
};

DifferentiatorModel make_sond_model(const SondParams& p, std::string label = "sond");
DifferentiatorModel make_hgtd_model(const HgtdParams& p, std::string label = "hgtd");
DifferentiatorModel make_red_model(const RedParams& p, std::string label = "red");

/// Label -> model factory. Ships with "sond", "hgtd", "red" bound to their
/// published parameter sets; additional differentiators hook in through
/// register_model without touching the core.
class ModelRegistry {
public:
    using Factory = std::function<DifferentiatorModel()>;

    /// Registry preloaded with the built-in models.
    static ModelRegistry with_builtins();

    void register_model(const std::string& label, Factory factory);
    bool contains(const std::string& label) const;
    /// Throws std::invalid_argument for unknown labels. Labels whose
    /// parameters are recorded but whose dynamics are plugin-only
    /// ("hcnd", "rcnd", "reucaod") get a message saying so.
    DifferentiatorModel make(const std::string& label) const;
    std::vector<std::string> labels() const;

private:
    std::map<std::string, Factory> factories_;
};

/// Channels attached to the run: r, r_hat, dr_hat, ref_deriv, and the
/// derivative-estimation error e = ref_deriv - dr_hat.
Trajectory simulate_differentiator(const DifferentiatorModel& model,
                                   const SignalCase& signal,
                                   const IntegratorConfig& cfg);

}  // namespace sondlab
