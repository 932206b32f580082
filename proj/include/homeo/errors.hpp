#pragma once

#include <stdexcept>
#include <string>

namespace homeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed network documents and contract violations on user input
/// (unknown nodes, non-core networks, input equal to output, ...).
class NetworkError : public Error {
 public:
  using Error::Error;
};

/// More io-simple paths exist than the caller's cap allows.
class PathExplosion : public Error {
 public:
  explicit PathExplosion(std::size_t cap)
      : Error("more than " + std::to_string(cap) + " io-simple paths"), cap_(cap) {}
  [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An internal consistency check failed. Always indicates a bug or an
/// input outside the documented assumptions.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateSampling : public Error {
 public:
  using Error::Error;
};

class NoAdjustableEntry : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace homeo
