#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: malformed polynomial, bad splitting type, unknown preset.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed one of the enumeration guards.
class TooLarge : public Error {
public:
    using Error::Error;
};

class ReduciblePolynomial : public Error {
public:
    using Error::Error;
};

class NotSquarefree : public Error {
public:
    using Error::Error;
};

/// Numeric rounding could not be decided at the working precision.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DegenerateFamily : public Error {
public:
    using Error::Error;
};

class Reducible : public Error {
public:
    using Error::Error;
};

}  // namespace vdw
