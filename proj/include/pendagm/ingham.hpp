#pragma once

#include "pendagm/agm.hpp"

namespace pendagm {

enum class ErrorBasis {
    true_value,        // R = (true - approx) / true
    approximate_value, // R-bar = (true - approx) / approx
};

struct RelativeError {
    double value = 0.0; // >= 0, magnitude only
    ErrorBasis basis = ErrorBasis::true_value;
};

/// R-bar = R / (1 - R) and R = R-bar / (1 + R-bar); round-trip is the
/// identity. Converting from the true_value basis requires value < 1.
RelativeError relative_error_convert(const RelativeError& e);

inline constexpr int max_significant_digits = 16;

/// Largest n with value <= 0.5 * 10^-n (0 if none); the number of significant
/// digits certified by a relative error on the true-value basis. value == 0
/// returns max_significant_digits. The comparison is non-strict so that a
/// bound sitting exactly on the threshold (e.g. 1/(2*10^10)) counts its digit.
int significant_digits(const RelativeError& r);

/// Measured relative errors below this are roundoff noise in binary64 and are
/// reported as "below measurement floor" rather than as numbers.
inline constexpr double measurement_floor = 1e-13;

enum class BoundKind { general_trace, closed_form };

/// Certified upper bound on R_n, the relative error of 1/a_n as an
/// approximation to 1/mu for the AGM on (1, cos(alpha/2)). bound may
/// underflow to 0 for large n; it is strictly positive in the usable range.
struct ErrorBudget {
    int order_n = 0;
    double bound = 0.0;
    BoundKind kind = BoundKind::general_trace;
};

/// (a_n - b_n) / (2 a_{n+1}) from the actual iterates. Valid for any n >= 0.
ErrorBudget ingham_bound_trace(double alpha, int n, const Tolerance& tol = default_tolerance());

/// Closed forms: n = 2: (sin(alpha/4) tan(alpha/4))^4 / (2^6 cos(alpha/2));
/// n = 3: (sin(alpha/4) tan(alpha/4))^8 / (2^14 cos^2(alpha/2)). Other orders
/// throw UnsupportedOrderError.
ErrorBudget ingham_bound_closed(double alpha, int n);

enum class ApproxKind { arithmetic, geometric };

/// Measured R_n = (a_n - mu)/a_n (arithmetic) or r_n = (mu - b_n)/b_n
/// (geometric), with mu = pi/(2 K) taken from the quadrature oracle so the
/// measurement is independent of the AGM trace it judges. Clamped at 0;
/// values below measurement_floor are noise.
RelativeError measured_error(double alpha, int n, ApproxKind kind, double oracle_tol = 1e-13);

/// Largest amplitude (radians) whose order-n bound stays <= epsilon, by
/// bisection to 1e-10 rad. The bounds increase strictly in alpha. Returns the
/// domain endpoint (pi - 1e-9, or 0) when the bound never crosses epsilon.
double amplitude_threshold(int n, double epsilon, BoundKind kind);

} // namespace pendagm
