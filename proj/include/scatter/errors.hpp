#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (bad file, bad field, violated parse-time guard).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Arguments outside a routine's supported envelope or a violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A special-function value exceeded the representable range (|Y_m| > 1e300).
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A solver declined to run (non-contractive iteration, failed factorization).
/// Carries the diagnostic that motivated the refusal.
class SolverRefusal : public Error {
public:
    SolverRefusal(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

}  // namespace scatter
