#pragma once

#include <stdexcept>
#include <string>

namespace fdslab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: file syntax, family specs, out-of-domain parameters.
struct InputError : Error {
    using Error::Error;
};

// A configured resource cap (state count, cycle enumeration, search space)
// was hit. Recoverable by raising the cap.
struct CapExceeded : Error {
    using Error::Error;
};

// A self-check failed: a construction or exact solver produced a value that
// contradicts an independently computed one. Always a bug, never bad input.
struct VerificationError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    int line;
    ParseError(const std::string& msg, int line_)
        : InputError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct LoopError : InputError {
    using InputError::InputError;
};

struct NotPrimePower : InputError {
    using InputError::InputError;
};
struct TooLarge : InputError {
    using InputError::InputError;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct BadSpec : InputError {
    using InputError::InputError;
};
struct PaleyNotApplicable : InputError {
    using InputError::InputError;
};
struct NotAcyclic : Error {
    using Error::Error;
};
struct NotSymmetric : InputError {
    using InputError::InputError;
};
struct Infeasible : Error {
    using Error::Error;
};
struct QTooLarge : InputError {
    using InputError::InputError;
};
struct BadR : InputError {
    using InputError::InputError;
};
struct MissingQuantity : Error {
    using Error::Error;
};

}  // namespace fdslab
