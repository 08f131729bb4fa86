#include "pendagm/agm.hpp"

#include "pendagm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace pendagm {

Tolerance default_tolerance(double scale) {
    return {4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale), 64};
}

AgmPair::AgmPair(double a, double b, int index) : a_(a), b_(b), index_(index) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("AgmPair: values must be finite");
    if (a < 0.0 || b < 0.0)
        throw DomainError("AgmPair: values must be nonnegative");
    if (index < 0)
        throw DomainError("AgmPair: index must be nonnegative");
    if (a_ < b_)
        std::swap(a_, b_);
}

AgmPair agm_step(const AgmPair& p) {
    return AgmPair((p.a() + p.b()) / 2, std::sqrt(p.a() * p.b()), p.index() + 1);
}

static void validate_tolerance(const Tolerance& tol) {
    if (!(tol.eps > 0.0))
        throw DomainError("Tolerance: eps must be positive");
    if (tol.max_iter < 1)
        throw DomainError("Tolerance: max_iter must be >= 1");
}

AgmTrace run_agm(double a, double b, const Tolerance& tol) {
    validate_tolerance(tol);
    AgmTrace trace;
    trace.pairs.push_back(AgmPair(a, b, 0));
    while (trace.last().gap() > tol.eps && trace.last().index() < tol.max_iter)
        trace.pairs.push_back(agm_step(trace.last()));
    trace.converged = trace.last().gap() <= tol.eps;
    // The limit is exactly 0 whenever b = 0 (the geometric mean pins it).
    trace.mean = trace.last().b() == 0.0 ? 0.0 : trace.last().midpoint();
    return trace;
}

AgmTrace agm_mean(double a, double b, const Tolerance& tol) {
    AgmTrace trace = run_agm(a, b, tol);
    if (!trace.converged) {
        char msg[128];
        std::snprintf(msg, sizeof(msg), "agm_mean: gap %g above eps %g after %d iterations",
                      trace.last().gap(), tol.eps, tol.max_iter);
        throw NonConvergenceError(msg);
    }
    return trace;
}

AgmTrace agm_mean(double a, double b) {
    return agm_mean(a, b, default_tolerance(std::max(a, b)));
}

double gap_bound(double a, double b, int n) {
    if (a < b || b < 0.0)
        throw DomainError("gap_bound: requires a >= b >= 0");
    if (n < 0)
        throw DomainError("gap_bound: n must be nonnegative");
    return std::ldexp(a - b, -n);
}

} // namespace pendagm
