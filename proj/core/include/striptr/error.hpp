#pragma once

#include <stdexcept>
#include <string>

namespace striptr {

// Root of the library's exception hierarchy. Each subclass corresponds to one
// failure class that the CLI maps onto an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series operation was called outside its domain (e.g. log of a series with
// non-unit constant term, reading past the truncation order).
class MalformedSeriesError : public Error {
public:
    using Error::Error;
};

// Evaluation at a pole of a rational function or polylogarithm.
class PoleError : public Error {
public:
    using Error::Error;
};

// Geometry parameters violate an admissibility condition.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Two residue points or ramification points coincide, or a ramification
// point is not simple.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

// Ball arithmetic lost too much precision, or an iteration did not converge.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Requested (g, n) lies outside the configured recursion budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Operation is not defined for the requested arguments (e.g. F_g for g < 2).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Two distinct parameter pairs normalise to the same Kähler ratio.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace striptr
