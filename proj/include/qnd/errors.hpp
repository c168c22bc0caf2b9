// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>

namespace qnd {

// Invalid argument value (outside the mathematical domain of an operation).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request exceeds a configured capacity (table size, truncation limit).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Inconsistent configuration (mismatched tags, contradictory parameters).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// API misuse (operations applied in an unsupported order).
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Numerical procedure failed to reach its accuracy target.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qnd
