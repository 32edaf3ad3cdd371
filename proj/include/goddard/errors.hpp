#ifndef GODDARD_ERRORS_HPP
#define GODDARD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goddard {

// Rational construction with a zero denominator.
struct ZeroDenominatorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Binary series operation on series of different truncation orders.
struct OrderMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Composition with an inner series whose constant term is nonzero.
struct NonzeroConstantTermError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Shift-division by y^m of a series with a nonzero coefficient below y^m.
struct NonzeroLowOrderError : std::domain_error {
    using std::domain_error::domain_error;
};

// A closed-form expansion whose negative powers failed to cancel.
struct NegativePowerResidueError : std::domain_error {
    using std::domain_error::domain_error;
};

// Invalid caller-supplied parameters (grids, CLI ranges).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace goddard

#endif
