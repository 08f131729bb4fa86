#pragma once

#include <stdexcept>

namespace pendagm {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Iteration cap reached before meeting the requested tolerance.
class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive integrator hit its refinement limit above the error target.
class AccuracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested order has no closed form / no tabulated coefficients.
class UnsupportedOrderError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace pendagm
