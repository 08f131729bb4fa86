#pragma once

#include "pendagm/elliptic.hpp"
#include "pendagm/pendulum.hpp"

#include <vector>

namespace pendagm {

/// One application of the AGM renormalization map: the period is preserved
/// while l_1 = l / cos^4(alpha/4) (longer) and
/// alpha_1 = 2 arcsin(tan^2(alpha/4)) (smaller).
struct RenormStep {
    PendulumConfig before;
    PendulumConfig after;
    int index = 0;
};

RenormStep renormalize(const PendulumConfig& cfg);

/// Applies the map `steps` times. Amplitudes decrease and lengths increase
/// strictly along the chain; every state has the original period.
std::vector<RenormStep> renormalize_iter(const PendulumConfig& cfg, int steps);

/// K(k) / K(k2) for two moduli.
double singular_ratio(const Modulus& k, const Modulus& k2, const Tolerance& tol = default_tolerance());

/// Solves K(k)/K(k') = ratio for k by bisection (the ratio is strictly
/// increasing in k, with value 1 at k = 1/sqrt(2)). Requires ratio >= 1 and
/// a residual target tol > 0; throws NonConvergenceError if the iteration cap
/// is reached or the ratio is unreachable below the k -> 1 guard.
Modulus find_singular_modulus(double ratio, double tol);

} // namespace pendagm
