#include "pendagm/pendulum.hpp"

#include "pendagm/errors.hpp"

#include <cmath>
#include <numbers>

namespace pendagm {

namespace {

constexpr double pi = std::numbers::pi;

// T/T0 series in alpha, coefficients of alpha^2, alpha^4, alpha^6, alpha^8.
constexpr double series_coeff[4] = {1.0 / 16.0, 11.0 / 3072.0, 173.0 / 737280.0,
                                    22931.0 / 1321205760.0};

} // namespace

PendulumConfig::PendulumConfig(double length_l, double gravity_g, double amplitude_alpha)
    : length_(length_l), gravity_(gravity_g), amplitude_(amplitude_alpha) {
    if (!std::isfinite(length_l) || !(length_l > 0.0))
        throw DomainError("PendulumConfig: length must be positive");
    if (!std::isfinite(gravity_g) || !(gravity_g > 0.0))
        throw DomainError("PendulumConfig: gravity must be positive");
    if (!std::isfinite(amplitude_alpha) || !(amplitude_alpha > 0.0) || !(amplitude_alpha < pi))
        throw DomainError("PendulumConfig: amplitude must lie in (0, pi)");
}

ApproxMethod ApproxMethod::series(int order) {
    if (order < 1 || order > 4)
        throw UnsupportedOrderError("ApproxMethod::series: only orders 1..4 have tabulated coefficients");
    return {Tag::series, order};
}

ApproxMethod ApproxMethod::agm_arithmetic(int n) {
    if (n < 0)
        throw UnsupportedOrderError("ApproxMethod::agm_arithmetic: n must be >= 0");
    return {Tag::agm_arithmetic, n};
}

ApproxMethod ApproxMethod::agm_geometric(int n) {
    if (n < 0)
        throw UnsupportedOrderError("ApproxMethod::agm_geometric: n must be >= 0");
    return {Tag::agm_geometric, n};
}

double period_exact(const PendulumConfig& cfg, const Tolerance& tol) {
    const Modulus m = Modulus::from_amplitude(cfg.amplitude());
    return 4.0 * std::sqrt(cfg.length() / cfg.gravity()) * elliptic_k_agm(m, tol);
}

AgmPair amplitude_agm_pair(double alpha, int n) {
    if (!(alpha > 0.0) || !(alpha < pi))
        throw DomainError("amplitude_agm_pair: amplitude must lie in (0, pi)");
    AgmPair p(1.0, std::cos(alpha / 2), 0);
    for (int i = 0; i < n; ++i)
        p = agm_step(p);
    return p;
}

AgmPair amplitude_agm_pair_closed(double alpha, int n) {
    if (!(alpha > 0.0) || !(alpha < pi))
        throw DomainError("amplitude_agm_pair_closed: amplitude must lie in (0, pi)");
    const double c2 = std::cos(alpha / 2);
    const double c4 = std::cos(alpha / 4);
    const double r = std::sqrt(c2);
    switch (n) {
    case 0:
        return AgmPair(1.0, c2, 0);
    case 1:
        return AgmPair(c4 * c4, r, 1);
    case 2: {
        const double one_plus_r = 1.0 + r;
        return AgmPair(one_plus_r * one_plus_r / 4, c4 * std::sqrt(r), 2);
    }
    case 3: {
        // (a_2 + b_2)/2 collapses to a perfect square in cos(alpha/4) and
        // cos(alpha/2)^(1/4).
        const double s = c4 + std::sqrt(r);
        const double b3 = (1.0 + r) / 2 * std::sqrt(c4) * std::pow(c2, 0.125);
        return AgmPair(s * s / 4, b3, 3);
    }
    default:
        throw UnsupportedOrderError("amplitude_agm_pair_closed: closed forms exist for n = 0..3");
    }
}

double period_approx(const PendulumConfig& cfg, const ApproxMethod& method) {
    const double t0 = 2.0 * pi * std::sqrt(cfg.length() / cfg.gravity());
    const double alpha = cfg.amplitude();
    switch (method.tag) {
    case ApproxMethod::Tag::huygens:
        return t0;
    case ApproxMethod::Tag::p2: {
        const double s = std::sin(alpha / 2);
        return t0 * (1.0 + s * s / 4);
    }
    case ApproxMethod::Tag::bernoulli:
        return t0 * (1.0 + alpha * alpha / 16);
    case ApproxMethod::Tag::series: {
        if (method.order < 1 || method.order > 4)
            throw UnsupportedOrderError("period_approx: series orders 1..4 only");
        const double a2 = alpha * alpha;
        double power = 1.0;
        double sum = 1.0;
        for (int i = 0; i < method.order; ++i) {
            power *= a2;
            sum += series_coeff[i] * power;
        }
        return t0 * sum;
    }
    case ApproxMethod::Tag::agm_arithmetic:
    case ApproxMethod::Tag::agm_geometric: {
        const AgmPair p = method.order <= 3 ? amplitude_agm_pair_closed(alpha, method.order)
                                            : amplitude_agm_pair(alpha, method.order);
        return t0 / (method.tag == ApproxMethod::Tag::agm_arithmetic ? p.a() : p.b());
    }
    }
    throw DomainError("period_approx: unknown method");
}

std::pair<double, double> pars_thurston_bounds(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= pi / 2))
        throw DomainError("pars_thurston_bounds: amplitude must lie in (0, pi/2]");
    const double half = alpha / 2;
    const double lower = half / std::sin(half);
    const double upper = std::sqrt(alpha / std::sin(alpha));
    return {lower, upper};
}

double clock_loss_seconds_per_day(double alpha, double alpha_new, double l, double g, ClockMode mode) {
    if (!(alpha > 0.0) || !(alpha_new >= alpha) || !(alpha_new < pi))
        throw DomainError("clock_loss_seconds_per_day: requires 0 < alpha <= alpha_new < pi");
    if (!(l > 0.0) || !(g > 0.0))
        throw DomainError("clock_loss_seconds_per_day: l and g must be positive");
    const double k_base = elliptic_k_agm(Modulus::from_amplitude(alpha));
    const double k_new = elliptic_k_agm(Modulus::from_amplitude(alpha_new));
    if (mode == ClockMode::calibrated_seconds)
        return 86400.0 * (1.0 - k_base / k_new);
    return 43200.0 * std::sqrt(g / l) * (1.0 / k_base - 1.0 / k_new);
}

double small_angle_loss_approx(double alpha, double delta_alpha, long beats_per_day) {
    if (!(alpha > 0.0) || delta_alpha < 0.0)
        throw DomainError("small_angle_loss_approx: requires alpha > 0 and delta_alpha >= 0");
    if (beats_per_day <= 0)
        throw DomainError("small_angle_loss_approx: beats_per_day must be positive");
    return static_cast<double>(beats_per_day) * std::sin(alpha) * delta_alpha / 8.0;
}

} // namespace pendagm
