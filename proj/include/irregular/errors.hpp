#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace irregular {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exact integer result does not fit in 64 bits.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Arguments outside the domain of an operation (bad parameters, an index past
/// the end of a finite specification, incompatible partitions).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A request would materialize more elements than the configured cap.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A floating-point root landed outside the correction window.
class PrecisionError : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  FormatError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Non-contiguous indices in a b-file.
class GapError : public FormatError {
public:
  using FormatError::FormatError;
};

class NetworkError : public Error {
public:
  using Error::Error;
};

class HttpStatusError : public Error {
public:
  explicit HttpStatusError(int status)
      : Error("HTTP status " + std::to_string(status)), status_(status) {}
  int status() const noexcept { return status_; }

private:
  int status_;
};

} // namespace irregular
