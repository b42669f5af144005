#pragma once

#include <stdexcept>
#include <string>

namespace rwodsn {

// Caller passed an argument outside an operation's contract.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file; line is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  std::size_t line;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// ICP source set is collinear (or smaller than 3 points).
struct DegenerateAlignment : std::runtime_error {
  explicit DegenerateAlignment(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rwodsn
