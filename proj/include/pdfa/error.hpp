#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdfa {

// Caller-side mistakes: bad parameters, foreign symbols, mismatched alphabets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed `.pdfa` text. `line()` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A bound evaluator was asked for a value outside the range where the bound holds.
class InapplicableBound : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace pdfa
