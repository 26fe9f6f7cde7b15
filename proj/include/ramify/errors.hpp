#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramify {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Mathematical input rejected: the projection center lies on the scheme,
/// the generators are not homogeneous, and similar.
class InputRejected : public Error {
public:
  InputRejected(std::string code, const std::string& message)
      : Error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

class CenterOnScheme : public InputRejected {
public:
  explicit CenterOnScheme(const std::string& message)
      : InputRejected("CENTER_ON_SCHEME", message) {}
};

/// The partial elimination chain never reached the unit ideal.
class NonTerminating : public InputRejected {
public:
  explicit NonTerminating(const std::string& message)
      : InputRejected("NONTERMINATING", message) {}
};

/// A configured work bound (RAMIFY_MAX_PAIRS, variable capacity) was hit.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

} // namespace ramify
