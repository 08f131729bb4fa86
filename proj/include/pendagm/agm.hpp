#pragma once

#include <vector>

namespace pendagm {

/// Stopping policy for the AGM iteration: absolute gap target for a_n - b_n
/// plus an iteration cap. The gap halves at least once per step and in
/// practice squares, so max_iter = 64 covers anything binary64 can resolve.
struct Tolerance {
    double eps;
    int max_iter;
};

/// eps = 4 * machine epsilon * max(1, scale), max_iter = 64.
Tolerance default_tolerance(double scale = 1.0);

/// One AGM state (a_n, b_n). Normalized so that a >= b >= 0; constructing
/// with a < b swaps the values (the mean is symmetric). Rejects negative or
/// non-finite input.
class AgmPair {
  public:
    AgmPair(double a, double b, int index = 0);

    double a() const { return a_; }
    double b() const { return b_; }
    int index() const { return index_; }

    double gap() const { return a_ - b_; }
    double midpoint() const { return (a_ + b_) / 2; }

  private:
    double a_;
    double b_;
    int index_;
};

/// ((a+b)/2, sqrt(a*b)), index + 1.
AgmPair agm_step(const AgmPair& p);

/// Full iteration history. pairs[n+1] is exactly one agm_step of pairs[n];
/// the a_n are non-increasing and the b_n non-decreasing. mean is the final
/// midpoint (a_N + b_N)/2, which lies strictly between the last a and b and
/// halves the residual compared to either endpoint; for b == 0 the limit is
/// exactly 0 and mean is set to 0.
struct AgmTrace {
    std::vector<AgmPair> pairs;
    double mean = 0.0;
    bool converged = false;

    const AgmPair& last() const { return pairs.back(); }
};

/// Iterates until a_n - b_n <= tol.eps or tol.max_iter steps; never throws on
/// non-convergence, the flag records it.
AgmTrace run_agm(double a, double b, const Tolerance& tol);

/// M(a, b). Same as run_agm but throws NonConvergenceError if the cap is hit
/// with the gap still above eps (pathological tolerance, not a math failure).
AgmTrace agm_mean(double a, double b, const Tolerance& tol);
AgmTrace agm_mean(double a, double b);

/// (a - b) / 2^n: dominates the actual gap of the n-th iterate.
double gap_bound(double a, double b, int n);

} // namespace pendagm
