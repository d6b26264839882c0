#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bdc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent or invalid configuration (shape mismatch, CFL violation, h <= 0...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// NaN or other floating-point breakdown inside a solver.
class NumericalError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input document. `where` is a human-readable position ("line 3, column 7").
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string where)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// The population outgrew the configured hard cap.
class ExplosionError : public Error {
public:
    ExplosionError(const std::string& what, double time_reached, std::size_t population,
                   std::size_t events)
        : Error(what), time_reached(time_reached), population(population), events(events) {}

    double time_reached;
    std::size_t population;
    std::size_t events;
};

}  // namespace bdc
