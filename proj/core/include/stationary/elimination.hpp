#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stationary/stochastic_matrix.hpp"

namespace stationary {

/// Relative rank cutoff 1e-12 * n * ||M||_inf.
double default_pivot_tol(const DenseMatrix& m) noexcept;

/// Reduced row echelon form obtained by Gauss-Jordan elimination with partial
/// pivoting. Columns whose best remaining pivot is <= pivot_tol are free.
struct Elimination {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[r] is the pivot of row r
  std::vector<std::size_t> free_columns;

  [[nodiscard]] std::size_t rank() const noexcept { return pivot_columns.size(); }
};

Elimination eliminate(DenseMatrix m, double pivot_tol);

/// Numerical null space. Each vector has infinity norm 1.
struct KernelBasis {
  std::size_t dimension = 0;
  std::vector<RowVector> vectors;
};

KernelBasis kernel_basis(const DenseMatrix& m, std::optional<double> pivot_tol = std::nullopt);

std::size_t rank_of(const DenseMatrix& m, std::optional<double> pivot_tol = std::nullopt);

/// Cutoff for P - I and its transpose: 1e-12 * n * max(||P - I||_inf, 1).
/// Forming p(i,i) - 1 leaves rounding of order ulp(1) however small
/// ||P - I|| is, so the scale never drops below that of P itself.
double stochastic_pivot_tol(const StochasticMatrix& p) noexcept;

/// Numerical rank of P - I; the cutoff defaults to stochastic_pivot_tol(p).
std::size_t rank_of_P_minus_I(const StochasticMatrix& p,
                              std::optional<double> pivot_tol = std::nullopt);

}  // namespace stationary
