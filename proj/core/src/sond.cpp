#include "sondlab/sond.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sondlab {

SondParams::SondParams(double a_, double b_, double c_, double rho_)
    : a(a_), b(b_), c(c_), rho(rho_) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("SondParams: a must satisfy 0 < a < 1");
    if (!(b > 0.0)) throw std::invalid_argument("SondParams: b must be > 0");
    if (!(c > 0.0)) throw std::invalid_argument("SondParams: c must be > 0");
    if (!(rho > 0.0)) throw std::invalid_argument("SondParams: rho must be > 0");
}

StatePair sond_dynamics(const StatePair& x, double r, const SondParams& p) {
    if (!std::isfinite(x.x1) || !std::isfinite(x.x2) || !std::isfinite(r))
        throw std::domain_error("sond_dynamics: non-finite input");
    const double arg = (p.b * x.x1 - (1.0 - p.a) * r) / p.c;
    return {x.x2, -p.rho * p.rho * std::tanh(arg) - p.rho * x.x2};
}

StatePair sond_output(const StatePair& x, const SondParams& p) {
    const double s = p.output_scale();
    return {s * x.x1, s * x.x2};
}

StatePair saturated_solution(const StatePair& x0, double rho, double t) {
    if (!(rho > 0.0)) throw std::invalid_argument("saturated_solution: rho must be > 0");
    if (!(t >= 0.0)) throw std::invalid_argument("saturated_solution: t must be >= 0");
    const double decay = std::exp(-rho * t);
    const double x2 = -rho + (rho + x0.x2) * decay;
    const double x1 =
        x0.x1 + 1.0 + x0.x2 / rho - rho * t - (1.0 + x0.x2 / rho) * decay;
    return {x1, x2};
}

LinearizedTf linearized_tf(const SondParams& p) {
    LinearizedTf tf;
    tf.wn = p.rho * std::sqrt(p.b / p.c);
    tf.zeta = 0.5 * std::sqrt(p.c / p.b);
    tf.dc_gain_x1 = (1.0 - p.a) / p.b;
    const double k = p.rho * p.rho * (1.0 - p.a) / p.c;
    tf.den = {1.0, p.rho, p.rho * p.rho * p.b / p.c};
    tf.num_x1 = {k};
    tf.num_x2 = {k, 0.0};

    const double disc = p.rho * p.rho / 4.0 - p.rho * p.rho * p.b / p.c;
    if (disc < 0.0) {
        const double im = std::sqrt(-disc);
        tf.roots = {std::complex<double>(-p.rho / 2.0, -im),
                    std::complex<double>(-p.rho / 2.0, im)};
    } else {
        const double re = std::sqrt(disc);
        tf.roots = {std::complex<double>(-p.rho / 2.0 - re, 0.0),
                    std::complex<double>(-p.rho / 2.0 + re, 0.0)};
    }
    return tf;
}

NaturalFrequencyDamping natural_frequency_damping(const SondParams& p) {
    return {p.rho * std::sqrt(p.b / p.c), 0.5 * std::sqrt(p.c / p.b)};
}

double magnitude_response_db(const SondParams& p, double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("magnitude_response_db: omega must be > 0");
    const auto [wn, zeta] = natural_frequency_damping(p);
    // |X2/R| = (1-a)/b * wn^2 * w / sqrt((wn^2 - w^2)^2 + (2 zeta wn w)^2),
    // evaluated with the w/wn ratio to stay scale-safe far from the band.
    const double u = omega / wn;
    const double mag_norm = u / std::sqrt((1.0 - u * u) * (1.0 - u * u) +
                                          (2.0 * zeta * u) * (2.0 * zeta * u));
    return 20.0 * std::log10((1.0 - p.a) / p.b) + 20.0 * std::log10(wn * mag_norm);
}

double lyapunov_value(const StatePair& x, const SondParams& p) {
    return (p.rho * p.rho * p.c / p.b) * log_cosh(p.b * x.x1 / p.c) +
           0.5 * x.x2 * x.x2;
}

double lyapunov_rate(const StatePair& x, const SondParams& p) {
    return -p.rho * x.x2 * x.x2;
}

double log_cosh(double y) {
    const double ay = std::fabs(y);
    return ay + std::log1p(std::exp(-2.0 * ay)) - std::numbers::ln2;
}

}  // namespace sondlab
