#pragma once

#include <stdexcept>
#include <string>

namespace cylqd {

/// Bad or unknown configuration input (CLI exit code 1).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the certified domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// K_n(x) is below the smallest normal double; use the scaled variant.
class UnderflowError : public std::underflow_error {
public:
    using std::underflow_error::underflow_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Iterative method failed to converge (CLI exit code 2).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Discretisation too coarse to give a stable answer.
class ResolutionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace cylqd
