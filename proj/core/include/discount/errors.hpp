#pragma once

#include <stdexcept>
#include <string>

namespace discount {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (negative time, p1 not in (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input violates a structural invariant (weights, grids, rates).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operation is only defined for a subset of the model families.
class UnsupportedFamilyError : public Error {
public:
    using Error::Error;
};

/// Exact path received data that is not exactly representable as required.
class ExactnessError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Rational function has a pole on the half-line being certified.
class PoleError : public Error {
public:
    using Error::Error;
};

class InsufficientHorizonError : public Error {
public:
    using Error::Error;
};

}  // namespace discount
