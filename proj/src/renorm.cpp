#include "pendagm/renorm.hpp"

#include "pendagm/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pendagm {

namespace {

constexpr double pi = std::numbers::pi;

// tan^2(alpha/4), with the near-pi branch computed from
// 1 - tan^2(x) = cos(2x)/cos^2(x) to keep alpha_1 accurate where the direct
// square is within a few ulps of 1.
double renorm_modulus(double alpha) {
    if (alpha > 170.0 * pi / 180.0) {
        const double c4 = std::cos(alpha / 4);
        return 1.0 - std::cos(alpha / 2) / (c4 * c4);
    }
    const double t = std::tan(alpha / 4);
    return t * t;
}

} // namespace

RenormStep renormalize(const PendulumConfig& cfg) {
    const double alpha = cfg.amplitude();
    const double c4 = std::cos(alpha / 4);
    const double l1 = cfg.length() / (c4 * c4 * c4 * c4);
    const double alpha1 = 2.0 * std::asin(renorm_modulus(alpha));
    return {cfg, PendulumConfig(l1, cfg.gravity(), alpha1), 0};
}

std::vector<RenormStep> renormalize_iter(const PendulumConfig& cfg, int steps) {
    if (steps < 1)
        throw DomainError("renormalize_iter: steps must be >= 1");
    std::vector<RenormStep> chain;
    chain.reserve(static_cast<size_t>(steps));
    PendulumConfig current = cfg;
    for (int i = 0; i < steps; ++i) {
        RenormStep step = renormalize(current);
        step.index = i;
        current = step.after;
        chain.push_back(step);
    }
    return chain;
}

double singular_ratio(const Modulus& k, const Modulus& k2, const Tolerance& tol) {
    return elliptic_k_agm(k, tol) / elliptic_k_agm(k2, tol);
}

Modulus find_singular_modulus(double ratio, double tol) {
    if (!(ratio >= 1.0))
        throw DomainError("find_singular_modulus: ratio must be >= 1");
    if (!(tol > 0.0))
        throw DomainError("find_singular_modulus: tol must be positive");

    auto ratio_at = [](double k) {
        const Modulus m = Modulus::from_k(k);
        return elliptic_k_agm(m) / elliptic_k_agm(Modulus::from_k(m.k_prime()));
    };

    // K(k)/K(k') is 1 at 1/sqrt(2) and strictly increasing in k.
    double lo = std::sqrt(0.5) - 1e-9;
    double hi = 1.0 - 2e-12;
    if (ratio_at(hi) < ratio)
        throw NonConvergenceError("find_singular_modulus: ratio " + std::to_string(ratio) +
                                  " unreachable below the k -> 1 guard");
    constexpr int max_bisections = 200;
    for (int i = 0; i < max_bisections; ++i) {
        const double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi)
            break;
        (ratio_at(mid) < ratio ? lo : hi) = mid;
    }
    const double k = (lo + hi) / 2;
    if (std::abs(ratio_at(k) - ratio) > tol)
        throw NonConvergenceError("find_singular_modulus: residual above tol at the bisection limit");
    return Modulus::from_k(k);
}

} // namespace pendagm
