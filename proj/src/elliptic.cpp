#include "pendagm/elliptic.hpp"

#include "pendagm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace pendagm {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double k_upper_guard = 1.0 - 1e-12;

} // namespace

Modulus Modulus::from_k(double k) {
    if (!std::isfinite(k) || k < 0.0)
        throw DomainError("Modulus: k must be finite and nonnegative");
    if (k >= k_upper_guard)
        throw DomainError("Modulus: k too close to 1, K(k) diverges");
    // (1-k)(1+k) avoids the cancellation of 1 - k^2 for k near 1.
    return Modulus(k, std::sqrt((1.0 - k) * (1.0 + k)), std::asin(k));
}

Modulus Modulus::from_amplitude(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= pi)
        throw DomainError("Modulus: amplitude must lie in [0, pi)");
    const double half = alpha / 2;
    const double k = std::sin(half);
    if (k >= k_upper_guard)
        throw DomainError("Modulus: amplitude too close to pi, K diverges");
    return Modulus(k, std::cos(half), half);
}

double elliptic_i_agm(double a, double b, const Tolerance& tol) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("elliptic_i_agm: requires a > 0 and b > 0");
    return pi / (2.0 * agm_mean(a, b, tol).mean);
}

double elliptic_i_agm(double a, double b) {
    return elliptic_i_agm(a, b, default_tolerance(std::max(a, b)));
}

namespace {

// G7-K15 nodes and weights (Kronrod abscissae on [0,1]; Gauss points are the
// odd-indexed ones). Standard QUADPACK dqk15 constants.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double lo;
    double hi;
    double value;
    double error;
};

template <class F>
Interval eval_g7k15(const F& f, double lo, double hi) {
    const double center = (lo + hi) / 2;
    const double halfwidth = (hi - lo) / 2;

    const double fc = f(center);
    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    double resabs = wgk[7] * std::abs(fc);
    double fv[7][2];
    for (int j = 0; j < 7; ++j) {
        const double dx = halfwidth * xgk[j];
        fv[j][0] = f(center - dx);
        fv[j][1] = f(center + dx);
        const double fsum = fv[j][0] + fv[j][1];
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::abs(fv[j][0]) + std::abs(fv[j][1]));
        if (j % 2 == 1)
            resg += wg[j / 2] * fsum;
    }

    // resasc-scaled QUADPACK error estimate.
    const double reskh = resk / 2;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv[j][0] - reskh) + std::abs(fv[j][1] - reskh));
    resasc *= halfwidth;
    resabs *= halfwidth;

    double err = std::abs(resk - resg) * halfwidth;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs);

    return {lo, hi, resk * halfwidth, err};
}

} // namespace

QuadratureResult elliptic_i_quadrature(double a, double b, double target_abs_err) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("elliptic_i_quadrature: requires a > 0 and b > 0");
    if (!(target_abs_err > 0.0))
        throw DomainError("elliptic_i_quadrature: target_abs_err must be positive");

    const double a2 = a * a;
    const double b2 = b * b;
    auto f = [a2, b2](double phi) {
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        return 1.0 / std::sqrt(a2 * c * c + b2 * s * s);
    };

    constexpr int max_intervals = 512;
    long evaluations = 15;
    std::vector<Interval> intervals{eval_g7k15(f, 0.0, pi / 2)};

    auto total_error = [&intervals]() {
        double e = 0.0;
        for (const Interval& iv : intervals)
            e += iv.error;
        return e;
    };

    while (total_error() > target_abs_err) {
        if (static_cast<int>(intervals.size()) >= max_intervals)
            throw AccuracyError("elliptic_i_quadrature: interval budget exhausted "
                                "(target too tight for binary64 or b too small)");
        auto worst = std::max_element(intervals.begin(), intervals.end(),
                                      [](const Interval& x, const Interval& y) { return x.error < y.error; });
        const double lo = worst->lo;
        const double hi = worst->hi;
        const double mid = (lo + hi) / 2;
        *worst = eval_g7k15(f, lo, mid);
        intervals.push_back(eval_g7k15(f, mid, hi));
        evaluations += 30;
    }

    QuadratureResult result;
    for (const Interval& iv : intervals) {
        result.value += iv.value;
        result.abs_error_estimate += iv.error;
    }
    result.evaluations = evaluations;
    return result;
}

double elliptic_k_agm(const Modulus& m, const Tolerance& tol) {
    return elliptic_i_agm(1.0, m.k_prime(), tol);
}

double elliptic_k_series(const Modulus& m, int terms) {
    if (terms < 0)
        throw DomainError("elliptic_k_series: terms must be nonnegative");
    constexpr int term_cap = 1000;
    const double k2 = m.k() * m.k();
    double coeff = 1.0; // [(2n-1)!! / (2n)!!]^2 k^(2n)
    double sum = 1.0;
    const int limit = std::min(terms, term_cap);
    for (int n = 1; n <= limit; ++n) {
        const double ratio = (2.0 * n - 1.0) / (2.0 * n);
        coeff *= ratio * ratio * k2;
        sum += coeff;
        if (coeff < sum * std::numeric_limits<double>::epsilon())
            break;
    }
    return pi / 2 * sum;
}

double gauss_substitution(double phi_prime, double a, double b) {
    if (!(phi_prime >= 0.0) || !(phi_prime <= pi / 2))
        throw DomainError("gauss_substitution: phi' must lie in [0, pi/2]");
    if (!(a >= b) || !(b > 0.0))
        throw DomainError("gauss_substitution: requires a >= b > 0");
    const double s = std::sin(phi_prime);
    const double s2 = s * s;
    // a(1+s^2) + b(1-s^2) = a + b + (a-b) s^2, but evaluates to exactly 2a at
    // s = 1 so the endpoint maps to pi/2 without a clamp artifact.
    const double denom = a * (1.0 + s2) + b * (1.0 - s2);
    return std::asin(std::min(2.0 * a * s / denom, 1.0));
}

double predict_iterations(double a, double b, double eps) {
    if (!(b > 0.0))
        throw DomainError("predict_iterations: requires b > 0");
    if (!(a > b))
        throw DomainError("predict_iterations: requires a > b");
    if (!(eps > 0.0))
        throw DomainError("predict_iterations: requires eps > 0");
    return std::log2((a - b) / (b * b * eps));
}

} // namespace pendagm
