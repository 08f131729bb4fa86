#pragma once

#include "pendagm/agm.hpp"

namespace pendagm {

/// Elliptic modulus k with complementary modulus k', k^2 + k'^2 = 1.
/// k is restricted to [0, 1 - 1e-12): K(k) diverges logarithmically at k = 1,
/// and binary64 cannot separate moduli closer to 1 than that anyway.
class Modulus {
  public:
    static Modulus from_k(double k);
    /// k = sin(alpha/2), k' = cos(alpha/2) for a pendulum amplitude alpha.
    static Modulus from_amplitude(double alpha);

    double k() const { return k_; }
    double k_prime() const { return k_prime_; }
    /// Modular angle alpha/2 = asin(k).
    double modular_angle() const { return modular_angle_; }

  private:
    Modulus(double k, double k_prime, double modular_angle)
        : k_(k), k_prime_(k_prime), modular_angle_(modular_angle) {}
    double k_;
    double k_prime_;
    double modular_angle_;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// I(a, b) = integral of dphi / sqrt(a^2 cos^2 phi + b^2 sin^2 phi) over
/// [0, pi/2], evaluated as pi / (2 M(a, b)). Requires a, b > 0 (the integral
/// diverges at b = 0). The overload without a tolerance scales eps to the
/// inputs.
double elliptic_i_agm(double a, double b, const Tolerance& tol);
double elliptic_i_agm(double a, double b);

/// Same integral by adaptive Gauss-Kronrod (G7-K15) bisection, independent of
/// the AGM path; this is the ground-truth oracle used by the tests and the
/// measured-error machinery. abs_error_estimate <= target_abs_err on success;
/// throws AccuracyError once the interval budget is exhausted.
QuadratureResult elliptic_i_quadrature(double a, double b, double target_abs_err);

/// K(k) = I(1, k').
double elliptic_k_agm(const Modulus& m, const Tolerance& tol = default_tolerance());

/// Partial sum of K(k) = (pi/2) {1 + sum [(2n-1)!! / (2n)!!]^2 k^(2n)}
/// through k^(2*terms). Non-decreasing in terms and bounded by K(k); slow
/// near k = 1. Stops early once a term drops below epsilon * partial sum.
double elliptic_k_series(const Modulus& m, int terms);

/// The Gauss/Landen change of variable: returns phi in [0, pi/2] with
/// sin phi = 2 a sin phi' / (a + b + (a - b) sin^2 phi'). Monotone in phi',
/// fixing both endpoints. Requires a >= b > 0.
double gauss_substitution(double phi_prime, double a, double b);

/// N(eps) = log2((a - b) / (b^2 eps)): past this index the AGM integrand
/// deviates from 1/mu by less than eps uniformly. Requires a > b > 0.
double predict_iterations(double a, double b, double eps);

} // namespace pendagm
