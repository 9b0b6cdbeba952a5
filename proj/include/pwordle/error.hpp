#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pwordle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidStrategy : public Error {
 public:
  using Error::Error;
};

/// Raised when an inductive strategy is requested with a top component
/// that is not a single cycle.
class NotCyclic : public InvalidStrategy {
 public:
  using InvalidStrategy::InvalidStrategy;
};

/// No legal next guess exists (fewer than two incorrect positions).
class IllegalMove : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), message_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The diagnostic without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A scan or verification exceeds the configured cost threshold.
class ScanRefused : public Error {
 public:
  ScanRefused(const std::string& what, double estimate, double threshold)
      : Error(what), estimate_(estimate), threshold_(threshold) {}
  double estimate() const noexcept { return estimate_; }
  double threshold() const noexcept { return threshold_; }

 private:
  double estimate_;
  double threshold_;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

}  // namespace pwordle
