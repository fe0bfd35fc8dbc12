#pragma once

#include <stdexcept>
#include <string>

namespace lexgb {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke the documented precondition of an operation.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Division by the zero polynomial, or inversion of a non-unit.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

// An input polynomial turned out to be nilpotent modulo a primary factor of T.
class AssumptionHViolated : public Error {
public:
    using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lexgb
