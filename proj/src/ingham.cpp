#include "pendagm/ingham.hpp"

#include "pendagm/elliptic.hpp"
#include "pendagm/errors.hpp"
#include "pendagm/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pendagm {

namespace {

constexpr double pi = std::numbers::pi;

// 10^n is exactly representable in binary64 for n <= 22.
double pow10_exact(int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i)
        p *= 10.0;
    return p;
}

} // namespace

RelativeError relative_error_convert(const RelativeError& e) {
    if (!std::isfinite(e.value) || e.value < 0.0)
        throw DomainError("relative_error_convert: value must be finite and nonnegative");
    if (e.basis == ErrorBasis::true_value) {
        if (e.value >= 1.0)
            throw DomainError("relative_error_convert: R >= 1 has no approximate-value form");
        return {e.value / (1.0 - e.value), ErrorBasis::approximate_value};
    }
    return {e.value / (1.0 + e.value), ErrorBasis::true_value};
}

int significant_digits(const RelativeError& r) {
    if (r.basis != ErrorBasis::true_value)
        throw DomainError("significant_digits: requires the true-value basis");
    if (!std::isfinite(r.value) || r.value < 0.0)
        throw DomainError("significant_digits: value must be finite and nonnegative");
    if (r.value == 0.0)
        return max_significant_digits;
    int n = 0;
    while (n < max_significant_digits && 2.0 * r.value * pow10_exact(n + 1) <= 1.0)
        ++n;
    if (2.0 * r.value > 1.0)
        return 0;
    return n;
}

ErrorBudget ingham_bound_trace(double alpha, int n, const Tolerance& tol) {
    if (!(alpha > 0.0) || !(alpha < pi))
        throw DomainError("ingham_bound_trace: amplitude must lie in (0, pi)");
    if (n < 0)
        throw DomainError("ingham_bound_trace: n must be nonnegative");
    if (n + 1 > tol.max_iter)
        throw DomainError("ingham_bound_trace: n + 1 exceeds the iteration cap");
    const AgmPair pn = amplitude_agm_pair(alpha, n);
    const AgmPair pn1 = agm_step(pn);
    return {n, pn.gap() / (2.0 * pn1.a()), BoundKind::general_trace};
}

ErrorBudget ingham_bound_closed(double alpha, int n) {
    if (!(alpha > 0.0) || !(alpha < pi))
        throw DomainError("ingham_bound_closed: amplitude must lie in (0, pi)");
    const double q = alpha / 4;
    const double st = std::sin(q) * std::tan(q);
    const double c2 = std::cos(alpha / 2);
    switch (n) {
    case 2: {
        const double st2 = st * st;
        return {2, st2 * st2 / (64.0 * c2), BoundKind::closed_form};
    }
    case 3: {
        const double st2 = st * st;
        const double st4 = st2 * st2;
        return {3, st4 * st4 / (16384.0 * c2 * c2), BoundKind::closed_form};
    }
    default:
        throw UnsupportedOrderError("ingham_bound_closed: closed forms exist for n = 2 and n = 3");
    }
}

RelativeError measured_error(double alpha, int n, ApproxKind kind, double oracle_tol) {
    if (!(alpha > 0.0) || !(alpha < pi))
        throw DomainError("measured_error: amplitude must lie in (0, pi)");
    if (n < 0)
        throw DomainError("measured_error: n must be nonnegative");
    const double k_prime = std::cos(alpha / 2);
    const QuadratureResult k = elliptic_i_quadrature(1.0, k_prime, oracle_tol);
    const double mu = pi / (2.0 * k.value);
    const AgmPair p = amplitude_agm_pair(alpha, n);
    const double value = kind == ApproxKind::arithmetic ? (p.a() - mu) / p.a() : (mu - p.b()) / p.b();
    return {std::max(value, 0.0), ErrorBasis::true_value};
}

double amplitude_threshold(int n, double epsilon, BoundKind kind) {
    if (n < 1)
        throw DomainError("amplitude_threshold: n must be >= 1");
    if (!(epsilon > 0.0))
        throw DomainError("amplitude_threshold: epsilon must be positive");
    auto bound_at = [n, kind](double alpha) {
        return kind == BoundKind::closed_form ? ingham_bound_closed(alpha, n).bound
                                              : ingham_bound_trace(alpha, n).bound;
    };
    double lo = 1e-9;
    double hi = pi - 1e-9;
    if (bound_at(hi) <= epsilon)
        return hi; // the bound never reaches epsilon on (0, pi)
    if (bound_at(lo) >= epsilon)
        return 0.0;
    while (hi - lo > 1e-10) {
        const double mid = (lo + hi) / 2;
        (bound_at(mid) <= epsilon ? lo : hi) = mid;
    }
    return lo;
}

} // namespace pendagm
