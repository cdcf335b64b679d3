#pragma once

#include <stdexcept>
#include <string>

namespace liestat {

/// Structural problems in input documents or flags (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated invariants on otherwise well-formed data (CLI exit code 3).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric trouble the library refuses to resolve silently (CLI exit code 4).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liestat
