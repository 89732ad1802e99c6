#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plectic6 {

// Malformed arguments: dimension mismatches, invalid multi-indices, bad specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that failed to parse. `line` is 1-based (0 when not line oriented),
// `offset` is the byte offset inside that line or expression.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t offset);

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t offset_;
};

// Operation requested on an input class it does not handle (for example
// normalizing a form of type (iii)).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expression evaluation failed at a point (division by ~0).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The normalizer exhausted its branches without meeting the residual bound.
class NormalizationFailed : public std::runtime_error {
 public:
  NormalizationFailed(const std::string& message, double best_residual)
      : std::runtime_error(message), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace plectic6
