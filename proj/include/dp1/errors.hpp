#pragma once

#include <stdexcept>
#include <string>

namespace dp1 {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle strings, curve names, matrix files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A group closure or element order ran past its guard.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A structural fact that must hold for valid inputs was found to fail.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace dp1
