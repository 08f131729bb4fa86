#pragma once

#include "pendagm/agm.hpp"
#include "pendagm/elliptic.hpp"

#include <utility>

namespace pendagm {

/// Simple pendulum: length l [m], gravity g [m/s^2], amplitude alpha
/// (maximum angular displacement, radians, in (0, pi)).
class PendulumConfig {
  public:
    PendulumConfig(double length_l, double gravity_g, double amplitude_alpha);

    double length() const { return length_; }
    double gravity() const { return gravity_; }
    double amplitude() const { return amplitude_; }

  private:
    double length_;
    double gravity_;
    double amplitude_;
};

struct ApproxMethod {
    enum class Tag { huygens, p2, bernoulli, series, agm_arithmetic, agm_geometric };

    Tag tag;
    int order; // series order (powers through alpha^(2*order)) or AGM index n

    static ApproxMethod huygens() { return {Tag::huygens, 0}; }
    static ApproxMethod p2() { return {Tag::p2, 0}; }
    static ApproxMethod bernoulli() { return {Tag::bernoulli, 0}; }
    static ApproxMethod series(int order);
    static ApproxMethod agm_arithmetic(int n);
    static ApproxMethod agm_geometric(int n);
};

/// T = 4 sqrt(l/g) K(sin(alpha/2)), seconds.
double period_exact(const PendulumConfig& cfg, const Tolerance& tol = default_tolerance());

/// The classical approximations. huygens: T0 = 2 pi sqrt(l/g). p2:
/// T0 (1 + sin^2(alpha/2)/4). bernoulli: T0 (1 + alpha^2/16). series(m):
/// T0 (1 + alpha^2/16 + 11 alpha^4/3072 + 173 alpha^6/737280
/// + 22931 alpha^8/1321205760) truncated after alpha^(2m), m <= 4.
/// agm_arithmetic(n): T0 / a_n and agm_geometric(n): T0 / b_n with (a_n, b_n)
/// the AGM iterates of (1, cos(alpha/2)); n <= 3 uses the closed forms.
double period_approx(const PendulumConfig& cfg, const ApproxMethod& method);

/// (a_n, b_n) for the AGM on (1, cos(alpha/2)), iterated.
AgmPair amplitude_agm_pair(double alpha, int n);
/// Same, from the closed forms; only n = 0..3 exist.
AgmPair amplitude_agm_pair_closed(double alpha, int n);

/// (lower, upper) bounds on T / T0: (alpha/2)/sin(alpha/2) and
/// sqrt(alpha/sin alpha). Valid for 0 < alpha <= pi/2.
std::pair<double, double> pars_thurston_bounds(double alpha);

enum class ClockMode {
    /// sqrt(g/l) derived from the calibration N*T/2 = 86400 at the base
    /// amplitude (one beat = one second there); result is seconds/day and
    /// independent of the supplied l, g.
    calibrated_seconds,
    /// 43200 sqrt(g/l) {1/K(alpha) - 1/K(alpha_new)}; result is beats/day
    /// with the supplied l, g taken verbatim.
    raw,
};

/// Daily loss when the swing amplitude grows from alpha to alpha_new.
/// Calibrated mode evaluates 86400 (1 - K(alpha)/K(alpha_new)).
double clock_loss_seconds_per_day(double alpha, double alpha_new, double l, double g,
                                  ClockMode mode = ClockMode::calibrated_seconds);

/// First-order loss estimate N sin(alpha) dalpha / 8, beats per day.
double small_angle_loss_approx(double alpha, double delta_alpha, long beats_per_day);

} // namespace pendagm
