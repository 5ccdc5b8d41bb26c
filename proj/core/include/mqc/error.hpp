#pragma once

#include <stdexcept>
#include <string>

namespace mqc {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or inconsistent user input: config files, unknown species, malformed schedules.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Unit or dimension misuse in quantity arithmetic.
class UnitError : public Error {
public:
    explicit UnitError(const std::string& msg) : Error(msg) {}
};

// Request outside a formula's or algorithm's validity range.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

} // namespace mqc
