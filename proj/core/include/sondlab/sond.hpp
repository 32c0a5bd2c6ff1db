#pragma once

#include <array>
#include <complex>
#include <utility>

namespace sondlab {

/// Design factors of the tanh tracking differentiator
///
///   dx1 = x2
///   dx2 = -rho^2 * tanh((b*x1 - (1-a)*r) / c) - rho * x2
///
/// Valid ranges: 0 < a < 1, b > 0, c > 0, rho > 0. Construction rejects
/// anything else, each violation with its own message.
struct SondParams {
    double a;
    double b;
    double c;
    double rho;

    SondParams(double a, double b, double c, double rho);

    /// b/(1-a): maps the internal states onto signal/derivative estimates.
    double output_scale() const noexcept { return b / (1.0 - a); }
};

struct StatePair {
    double x1 = 0.0;
    double x2 = 0.0;
};

/// Right-hand side of the differentiator for input sample r.
StatePair sond_dynamics(const StatePair& x, double r, const SondParams& p);

/// Scaled estimates (r_hat, dr_hat) = (b/(1-a)) * (x1, x2).
StatePair sond_output(const StatePair& x, const SondParams& p);

/// Closed-form solution of the saturated regime
///
///   dx1 = x2,  dx2 = -rho^2 - rho*x2
///
/// reached while the tanh argument stays >> 1:
///   x2(t) = -rho + (rho + x2(0)) e^{-rho t}
///   x1(t) = x1(0) + 1 + x2(0)/rho - rho*t - (1 + x2(0)/rho) e^{-rho t}
StatePair saturated_solution(const StatePair& x0, double rho, double t);

/// Small-signal transfer functions obtained with tanh(y) -> y:
///
///   X1(s)/R(s) = rho^2 (1-a)/c / D(s)
///   X2(s)/R(s) = rho^2 (1-a)/c * s / D(s),   D(s) = s^2 + rho*s + rho^2 b/c
struct LinearizedTf {
    double wn = 0.0;          // rho * sqrt(b/c), rad/s
    double zeta = 0.0;        // 0.5 * sqrt(c/b)
    double dc_gain_x1 = 0.0;  // (1-a)/b
    std::array<double, 3> den{};     // {1, rho, rho^2 b/c}, descending powers
    std::array<double, 1> num_x1{};  // {rho^2 (1-a)/c}
    std::array<double, 2> num_x2{};  // {rho^2 (1-a)/c, 0}
    std::array<std::complex<double>, 2> roots{};  // -rho/2 -+ sqrt(rho^2/4 - rho^2 b/c)
};

LinearizedTf linearized_tf(const SondParams& p);

struct NaturalFrequencyDamping {
    double wn = 0.0;
    double zeta = 0.0;
};

/// wn = rho*sqrt(b/c) and zeta = 0.5*sqrt(c/b). zeta << 1 yields the
/// under-damped peaking regime.
NaturalFrequencyDamping natural_frequency_damping(const SondParams& p);

/// 20*log10 |X2(jw)/R(jw)| from the exact second-order transfer function.
/// Rises +20 dB/dec below wn (differentiator band), falls -20 dB/dec far
/// above it. Throws std::domain_error for omega <= 0.
double magnitude_response_db(const SondParams& p, double omega);

/// V(x) = (rho^2 c / b) ln cosh(b x1 / c) + x2^2 / 2 for the r = 0 system.
/// The leading coefficient is the one that makes the cross terms cancel,
/// giving dV/dt = -rho * x2^2 exactly.
double lyapunov_value(const StatePair& x, const SondParams& p);

/// dV/dt along the r = 0 flow: -rho * x2^2.
double lyapunov_rate(const StatePair& x, const SondParams& p);

/// Overflow-safe ln(cosh(y)): |y| + log1p(e^{-2|y|}) - ln 2.
double log_cosh(double y);

}  // namespace sondlab
