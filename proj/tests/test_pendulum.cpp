#include "pendagm/pendulum.hpp"

#include "pendagm/errors.hpp"
#include "pendagm/ingham.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace pendagm;
using testsupport::close_rel;
using testsupport::make_rng;
using testsupport::uniform;

namespace {
constexpr double pi = std::numbers::pi;

double deg(double d) { return d * pi / 180.0; }
} // namespace

TEST_SUITE_BEGIN("pendulum");

TEST_CASE("config validation") {
    CHECK_THROWS_AS(PendulumConfig(0.0, 9.81, 1.0), DomainError);
    CHECK_THROWS_AS(PendulumConfig(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(PendulumConfig(1.0, 9.81, 0.0), DomainError);
    CHECK_THROWS_AS(PendulumConfig(1.0, 9.81, pi), DomainError);
    CHECK_THROWS_AS(PendulumConfig(1.0, 9.81, -0.3), DomainError);
}

TEST_CASE("exact period: small-angle limit, l = g normalization, Pars-Thurston window") {
    const PendulumConfig tiny(1.0, 9.80665, 1e-9);
    CHECK(close_rel(period_exact(tiny), period_approx(tiny, ApproxMethod::huygens()), 1e-12));

    const PendulumConfig unit(9.80665, 9.80665, deg(90));
    CHECK(close_rel(period_approx(unit, ApproxMethod::huygens()), 2 * pi, 1e-15));
    // 4 K(sin 45 deg); mpmath K = 1.854074677301371918434
    CHECK(close_rel(period_exact(unit), 4 * 1.8540746773013719, 1e-13));

    const double ratio = period_exact(unit) / (2 * pi);
    const auto [lower, upper] = pars_thurston_bounds(deg(90));
    CHECK(ratio >= lower);
    CHECK(ratio <= upper);

    // K diverges as the amplitude approaches pi.
    CHECK_THROWS_AS(period_exact(PendulumConfig(1.0, 9.81, pi - 1e-7)), DomainError);
}

TEST_CASE("classical approximations") {
    const PendulumConfig cfg(9.80665, 9.80665, 0.4);
    const double t0 = period_approx(cfg, ApproxMethod::huygens());
    CHECK(close_rel(t0, 2 * pi, 1e-15));
    CHECK(close_rel(period_approx(cfg, ApproxMethod::bernoulli()), 2 * pi * 1.01, 1e-14));

    const double s = std::sin(0.2);
    CHECK(close_rel(period_approx(cfg, ApproxMethod::p2()), t0 * (1 + s * s / 4), 1e-15));

    // Huygens ignores the amplitude.
    const PendulumConfig other(9.80665, 9.80665, 2.5);
    CHECK(period_approx(other, ApproxMethod::huygens()) == t0);
}

TEST_CASE("series approximation through alpha^8") {
    const PendulumConfig cfg(1.0, 9.80665, 0.2);
    const double t0 = period_approx(cfg, ApproxMethod::huygens());
    const double a2 = 0.04;
    const double expected =
        1 + a2 / 16 + 11 * a2 * a2 / 3072 + 173 * a2 * a2 * a2 / 737280 + 22931 * a2 * a2 * a2 * a2 / 1321205760;
    CHECK(close_rel(period_approx(cfg, ApproxMethod::series(4)) / t0, expected, 1e-15));
    // mpmath value of the same truncation
    CHECK(close_rel(period_approx(cfg, ApproxMethod::series(4)) / t0, 1.0025057442284594, 1e-14));

    CHECK_THROWS_AS(ApproxMethod::series(0), UnsupportedOrderError);
    CHECK_THROWS_AS(ApproxMethod::series(5), UnsupportedOrderError);
    CHECK_THROWS_AS(ApproxMethod::agm_arithmetic(-1), UnsupportedOrderError);
}

TEST_CASE("AGM approximants: boxed closed form at 90 degrees") {
    const PendulumConfig cfg(1.0, 9.80665, deg(90));
    const double t0 = period_approx(cfg, ApproxMethod::huygens());
    const double r = std::sqrt(std::cos(deg(45)));
    const double boxed = 4.0 / ((1 + r) * (1 + r)); // T/T0 = {2/(1 + sqrt(cos(a/2)))}^2 / (1 - R2)
    CHECK(close_rel(period_approx(cfg, ApproxMethod::agm_arithmetic(2)) / t0, boxed, 1e-15));
}

TEST_CASE("closed-form iterates equal the iterated AGM to 1e-14") {
    for (double a : {1.0, 10.0, 45.0, 90.0, 135.0, 170.0, 179.0}) {
        const double alpha = deg(a);
        for (int n = 0; n <= 3; ++n) {
            const AgmPair iterated = amplitude_agm_pair(alpha, n);
            const AgmPair closed = amplitude_agm_pair_closed(alpha, n);
            CHECK(close_rel(iterated.a(), closed.a(), 1e-14));
            CHECK(close_rel(iterated.b(), closed.b(), 1e-14));
        }
    }
    CHECK_THROWS_AS(amplitude_agm_pair_closed(deg(90), 4), UnsupportedOrderError);
}

TEST_CASE("approximation ordering below pi/2") {
    auto rng = make_rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = uniform(rng, 1e-3, pi / 2);
        const PendulumConfig cfg(1.0, 9.80665, alpha);
        const double exact = period_exact(cfg);
        const double huygens = period_approx(cfg, ApproxMethod::huygens());
        const double p2 = period_approx(cfg, ApproxMethod::p2());
        const double bernoulli = period_approx(cfg, ApproxMethod::bernoulli());
        const double series4 = period_approx(cfg, ApproxMethod::series(4));
        CHECK(huygens <= p2);
        CHECK(huygens <= bernoulli);
        CHECK(p2 <= exact * (1 + 1e-15));
        CHECK(bernoulli <= exact * (1 + 1e-15));
        CHECK(series4 <= exact * (1 + 1e-15));
    }
}

TEST_CASE("period is sandwiched by the AGM approximants") {
    auto rng = make_rng(666);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = uniform(rng, deg(0.5), deg(179));
        const PendulumConfig cfg(1.0, 9.80665, alpha);
        const double exact = period_exact(cfg);
        for (int n = 0; n <= 5; ++n) {
            const double arith = period_approx(cfg, ApproxMethod::agm_arithmetic(n));
            const double geom = period_approx(cfg, ApproxMethod::agm_geometric(n));
            CHECK(arith <= exact * (1 + 1e-14));
            CHECK(exact <= geom * (1 + 1e-14));
        }
    }
}

TEST_CASE("b_n approximates mu better, but 1/b_n does not beat 1/a_n") {
    // (mu - b_n) < (a_n - mu) always; on the reciprocal scale the order
    // reverses: R_n = (a_n - mu)/a_n <= r_n = (mu - b_n)/b_n.
    for (double a : {15.0, 30.0, 45.0, 60.0, 75.0, 90.0}) {
        const double alpha = deg(a);
        const QuadratureResult k = elliptic_i_quadrature(1.0, std::cos(alpha / 2), 1e-13);
        const double mu = pi / (2 * k.value);
        for (int n = 1; n <= 3; ++n) {
            const AgmPair p = amplitude_agm_pair(alpha, n);
            const double arith_gap = p.a() - mu;
            const double geom_gap = mu - p.b();
            CHECK(arith_gap >= -1e-12);
            CHECK(geom_gap >= -1e-12);
            if (p.gap() > 1e-4)
                CHECK(geom_gap < arith_gap);
            const RelativeError big = measured_error(alpha, n, ApproxKind::arithmetic, 1e-13);
            const RelativeError small = measured_error(alpha, n, ApproxKind::geometric, 1e-13);
            CHECK(big.value <= small.value + 2e-13);
        }
    }
}

TEST_CASE("period grows strictly with amplitude") {
    double prev = 0.0;
    for (int d = 1; d <= 179; ++d) {
        const double t = period_exact(PendulumConfig(1.0, 9.80665, deg(d)));
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("Pars-Thurston bounds: limits, values, domain") {
    const auto [l0, u0] = pars_thurston_bounds(1e-8);
    CHECK(close_rel(l0, 1.0, 1e-15));
    CHECK(close_rel(u0, 1.0, 1e-15));

    const auto [l9, u9] = pars_thurston_bounds(pi / 2);
    CHECK(close_rel(l9, 1.1107207345395916, 1e-14)); // (pi/4)/sin(pi/4)
    CHECK(close_rel(u9, 1.2533141373155003, 1e-14)); // sqrt(pi/2)
    CHECK(l9 > 1.0);
    CHECK(u9 > l9);

    CHECK_THROWS_AS(pars_thurston_bounds(0.0), DomainError);
    CHECK_THROWS_AS(pars_thurston_bounds(pi / 2 + 0.01), DomainError);
}

TEST_CASE("clock losses for a seconds pendulum") {
    CHECK(clock_loss_seconds_per_day(deg(3), deg(3), 1.0, 9.80665) == 0.0);

    // Swing 6 deg -> 8 deg and 6 -> 10: mpmath 11.51605523, 26.32203664.
    const double to8 = clock_loss_seconds_per_day(deg(3), deg(4), 1.0, 9.80665);
    const double to10 = clock_loss_seconds_per_day(deg(3), deg(5), 1.0, 9.80665);
    CHECK(close_rel(to8, 11.516055231819876, 1e-10));
    CHECK(close_rel(to10, 26.322036636348223, 1e-10));

    // Raw mode with the length that actually beats seconds at the base
    // amplitude reproduces the calibrated number.
    const double g = 9.80665;
    const double k_base = elliptic_k_agm(Modulus::from_amplitude(deg(3)));
    const double l = g / (4 * k_base * k_base);
    const double raw = clock_loss_seconds_per_day(deg(3), deg(4), l, g, ClockMode::raw);
    CHECK(close_rel(raw, to8, 1e-12));

    CHECK_THROWS_AS(clock_loss_seconds_per_day(deg(4), deg(3), 1.0, 9.8), DomainError);
    CHECK_THROWS_AS(clock_loss_seconds_per_day(0.0, deg(3), 1.0, 9.8), DomainError);
}

TEST_CASE("small-angle loss estimate") {
    CHECK(small_angle_loss_approx(deg(3), 0.0, 86400) == 0.0);
    CHECK(close_rel(small_angle_loss_approx(deg(3), deg(1), 86400), 9.865095339085753, 1e-12));
    const double once = small_angle_loss_approx(deg(3), deg(1), 86400);
    const double twice = small_angle_loss_approx(deg(3), deg(2), 86400);
    CHECK(close_rel(twice, 2 * once, 1e-15));
    CHECK_THROWS_AS(small_angle_loss_approx(deg(3), deg(1), 0), DomainError);

    // Same order as the exact clock loss for small swings.
    const double exact = clock_loss_seconds_per_day(deg(3), deg(4), 1.0, 9.80665);
    CHECK(once > exact * 0.5);
    CHECK(once < exact * 1.5);
}

TEST_CASE("amplitude where the Huygens formula reaches one percent") {
    // 1 - T0/T = 0.01 solved by bisection; mpmath gives 0.4001643197024615 rad
    // (22.93 deg).
    double lo = 0.1;
    double hi = 1.0;
    auto err = [](double alpha) {
        const PendulumConfig cfg(1.0, 9.80665, alpha);
        return 1.0 - period_approx(cfg, ApproxMethod::huygens()) / period_exact(cfg);
    };
    while (hi - lo > 1e-12)
        (err((lo + hi) / 2) < 0.01 ? lo : hi) = (lo + hi) / 2;
    CHECK(close_rel(lo, 0.4001643197024615, 1e-9));
}

TEST_SUITE_END();
