#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cannonball {

// Violated operation precondition (bad flags, composite modulus, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Memory or work budget exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value does not fit the wide-integer width.
struct ArithmeticRangeError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Z^2 differs from the weighted sum of squares of a weight function.
struct InvalidClassError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A polygon vertex with angle 0 or pi.
struct DegenerateInstanceError : std::runtime_error {
  DegenerateInstanceError(std::size_t vertex, const std::string& what) : std::runtime_error(what), vertex(vertex) {}
  std::size_t vertex;
};

// Numerical integration missed its tolerance.
struct AccuracyError : std::runtime_error {
  AccuracyError(double achieved, const std::string& what) : std::runtime_error(what), achieved(achieved) {}
  double achieved;
};

// A self-check on a result failed. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cannonball
