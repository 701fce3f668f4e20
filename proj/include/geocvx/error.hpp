#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geocvx {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (|z| >= 1 for atanh, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Spherical dilation whose image would reach or pass the antipode (k * d >= pi).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two coincident points where a geodesic through them was requested.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Antipodal pair: no unique spherical geodesic joins them.
class AntipodalError : public Error {
 public:
  using Error::Error;
};

/// A function under finite differencing returned NaN or inf.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Ray misses the arc (precondition of the ray/arc intersection violated).
class NoIntersectionError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampler could not draw points from a region.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-violating input document; `line` is 1-based, 0 if unknown.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace geocvx
