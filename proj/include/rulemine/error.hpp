#pragma once

#include <stdexcept>
#include <string>

namespace rulemine {

// Base for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (records, frequency files).
// CLI exit code 1.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Invalid configuration: bad flags, bad schema, out-of-range parameters.
// CLI exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Valid-looking data that violates an operation's preconditions
// (conflicting outcomes, empty denominators, out-of-range combinations).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

}  // namespace rulemine
