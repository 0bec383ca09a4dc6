#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsod {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unknown site id, missing attribute value, or mismatched key sets.
class LookupError : public Error {
public:
  using Error::Error;
};

/// Degenerate ring (fewer than three distinct vertices, zero area).
class GeometryError : public Error {
public:
  using Error::Error;
};

/// Two sites share a location, so 1/D is undefined.
class DegenerateDistanceError : public GeometryError {
public:
  using GeometryError::GeometryError;
};

class NoNeighborsError : public Error {
public:
  using Error::Error;
};

/// Every factor term vanished for a neighborhood; no weight can be formed.
class DegenerateFactorError : public Error {
public:
  using Error::Error;
};

/// Difference scores have zero spread (or fewer than two of them).
class DegenerateDistributionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::string source, std::size_t line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line) {}

  const std::string &source() const noexcept { return source_; }
  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

class WriteError : public Error {
public:
  using Error::Error;
};

} // namespace wsod
