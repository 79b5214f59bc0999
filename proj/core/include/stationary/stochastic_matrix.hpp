#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace stationary {

inline constexpr double kDefaultRowSumTol = 1e-9;
inline constexpr double kDefaultVectorSumTol = 1e-9;

/// Unconstrained row vector. Column vectors are stored the same way.
using RowVector = std::vector<double>;

/// Square dense matrix, row-major. Used for P - I, its transpose and other
/// intermediate matrices that are not stochastic.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }
  [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

  [[nodiscard]] DenseMatrix transposed() const;
  /// Max absolute row sum.
  [[nodiscard]] double norm_inf() const noexcept;
  /// Column-vector product M x.
  [[nodiscard]] RowVector apply(std::span<const double> x) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct ValidateOptions {
  double row_sum_tol = kDefaultRowSumTol;
  /// Divide each row by its sum once all sums are within row_sum_tol of 1.
  bool renormalize = false;
};

/// Validated n x n row-stochastic matrix. Immutable after construction.
class StochasticMatrix {
public:
  /// Validates raw rows. Throws NotSquare, NegativeEntry or RowSumViolation.
  static StochasticMatrix validate(const std::vector<std::vector<double>>& raw, ValidateOptions opts);
  static StochasticMatrix validate(const std::vector<std::vector<double>>& raw) {
    return validate(raw, ValidateOptions{});
  }
  static StochasticMatrix validate(std::initializer_list<std::initializer_list<double>> raw,
                                   ValidateOptions opts = {});

  static StochasticMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return dense_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return dense_(i, j); }
  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
    return dense_.row(i);
  }
  [[nodiscard]] const DenseMatrix& dense() const noexcept { return dense_; }
  [[nodiscard]] std::vector<std::vector<double>> rows() const;

  /// P - I.
  [[nodiscard]] DenseMatrix minus_identity() const;

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

private:
  explicit StochasticMatrix(DenseMatrix m) : dense_(std::move(m)) {}
  friend StochasticMatrix mat_mul(const StochasticMatrix&, const StochasticMatrix&);

  DenseMatrix dense_;
};

/// Nonnegative row vector with unit mass. Immutable after construction.
class ProbabilityVector {
public:
  /// Throws InvalidDistribution on a negative entry, empty input or bad mass.
  explicit ProbabilityVector(RowVector entries, double sum_tol = kDefaultVectorSumTol);

  static ProbabilityVector uniform(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return entries_; }
  [[nodiscard]] const RowVector& vector() const noexcept { return entries_; }
  // NOLINTNEXTLINE(google-explicit-constructor): lets vectors feed the span-based primitives.
  operator std::span<const double>() const noexcept { return entries_; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

private:
  RowVector entries_;
};

/// v P, with v a row vector.
RowVector vec_mat_mul(std::span<const double> v, const StochasticMatrix& p);

/// v P written into `out` (size n); `out` must not alias `v`.
void vec_mat_mul_into(std::span<const double> v, const StochasticMatrix& p, std::span<double> out);

/// A B. The product of stochastic matrices is stochastic up to rounding, so
/// the result is not re-validated.
StochasticMatrix mat_mul(const StochasticMatrix& a, const StochasticMatrix& b);

/// P^k by repeated multiplication, k >= 1.
StochasticMatrix mat_pow(const StochasticMatrix& p, std::size_t k);

/// ||v P - v||_inf.
double residual_norm(std::span<const double> v, const StochasticMatrix& p);

/// max_i |a(i) - b(i)|.
double distance_inf(std::span<const double> a, std::span<const double> b);

}  // namespace stationary
