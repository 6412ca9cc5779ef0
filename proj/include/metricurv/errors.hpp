#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metricurv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a data-model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Triangle with zero circumscribed-circle area: Menger curvature is infinite.
class InfiniteCurvatureError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested variant does not exist for this kind of network.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Generator or builder parameters out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Transport problem without a feasible coupling.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace metricurv
