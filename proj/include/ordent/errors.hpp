#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordent {

// Invalid arguments and domain violations use std::invalid_argument and
// std::domain_error. The types below cover failures caused by data.

/// Input samples that cannot be ordered (NaN, infinity).
class InvalidData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed series or table file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordent
