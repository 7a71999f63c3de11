#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cinder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A RatingConfig violates one of its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// n_bucket * w_min exceeds the capped rank range, so no bucket scheme exists.
class InfeasibleConfigError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// A record in a lobby or config file could not be decoded. `line()` is
/// 1-based; 0 means the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two lobbies (or index lists) of different sizes were compared.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Rejected queue mutation: duplicate id or wrong lobby size.
class QueueError : public Error {
 public:
  using Error::Error;
};

}  // namespace cinder
