#pragma once

#include <stdexcept>
#include <string>

namespace cmdviz {

// Input data failed a structural or numeric check. CLI maps this to exit 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Syntactically malformed input (JSON/CSV). Also exit 2.
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& what) : ValidationError(what) {}
};

// A configuration value is out of range (e.g. k > M).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An API precondition was violated by the caller.
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cmdviz
