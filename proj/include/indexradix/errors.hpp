#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indexradix {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: number literals, index lists, decimal fractions.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An argument outside an operation's domain (e.g. ilog2 of zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A carry or an index sum would leave the machine-word index range.
class IndexOverflow : public Error {
 public:
  using Error::Error;
};

// The transform length needed for an NTT product exceeds what the modulus
// supports.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class MaxCpuExceeded : public Error {
 public:
  MaxCpuExceeded(std::size_t required, std::size_t allowed)
      : Error("max CPUs exceeded: " + std::to_string(required) +
              " tasks required, " + std::to_string(allowed) + " allowed"),
        required_(required),
        allowed_(allowed) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t allowed() const noexcept { return allowed_; }

 private:
  std::size_t required_;
  std::size_t allowed_;
};

// Crossover analysis was asked for a pair with too few shared grid points.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

// A multiplier produced a product that disagrees with the reference during
// benchmarking.
class BenchCorrectnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace indexradix
