#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stationary {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  /// Stable machine-readable error name, e.g. "NegativeEntry".
  [[nodiscard]] virtual const char* kind() const noexcept = 0;
};

/// Input rejected while building a StochasticMatrix or ProbabilityVector.
class ValidationError : public Error {
public:
  using Error::Error;
};

class NotSquare : public ValidationError {
public:
  NotSquare(std::size_t rows, std::size_t bad_row, std::size_t bad_row_length);
  [[nodiscard]] const char* kind() const noexcept override { return "NotSquare"; }

  std::size_t rows;
  std::size_t bad_row;
  std::size_t bad_row_length;
};

class NegativeEntry : public ValidationError {
public:
  NegativeEntry(std::size_t i, std::size_t j, double value);
  [[nodiscard]] const char* kind() const noexcept override { return "NegativeEntry"; }

  std::size_t i;
  std::size_t j;
  double value;
};

class RowSumViolation : public ValidationError {
public:
  RowSumViolation(std::size_t row, double sum);
  [[nodiscard]] const char* kind() const noexcept override { return "RowSumViolation"; }

  std::size_t row;
  double sum;
};

/// A vector failed ProbabilityVector validation (negative entry or bad mass).
class InvalidDistribution : public ValidationError {
public:
  using ValidationError::ValidationError;
  [[nodiscard]] const char* kind() const noexcept override { return "InvalidDistribution"; }
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
  [[nodiscard]] const char* kind() const noexcept override { return "DimensionMismatch"; }

  std::size_t expected;
  std::size_t actual;
};

class IndexOutOfRange : public Error {
public:
  IndexOutOfRange(std::size_t index, std::size_t n);
  [[nodiscard]] const char* kind() const noexcept override { return "IndexOutOfRange"; }

  std::size_t index;
  std::size_t n;
};

/// Base for failures of the stationary-distribution solvers.
class SolverError : public Error {
public:
  using Error::Error;
};

/// The fixed-point space of vP = v is not one-dimensional.
class NotUniqueStationary : public SolverError {
public:
  explicit NotUniqueStationary(std::size_t kernel_dimension);
  [[nodiscard]] const char* kind() const noexcept override { return "NotUniqueStationary"; }

  std::size_t kernel_dimension;
};

class NonPositiveEntry : public SolverError {
public:
  NonPositiveEntry(std::size_t index, double value);
  [[nodiscard]] const char* kind() const noexcept override { return "NonPositiveEntry"; }

  std::size_t index;
  double value;
};

class MaxIterationsExceeded : public SolverError {
public:
  MaxIterationsExceeded(std::size_t iterations, double residual);
  [[nodiscard]] const char* kind() const noexcept override { return "MaxIterationsExceeded"; }

  std::size_t iterations;
  double residual;
};

class InvalidSpec : public Error {
public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "InvalidSpec"; }
};

}  // namespace stationary
