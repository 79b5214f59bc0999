#include "stationary/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace stationary {

double default_pivot_tol(const DenseMatrix& m) noexcept {
  return 1e-12 * static_cast<double>(m.size()) * m.norm_inf();
}

double stochastic_pivot_tol(const StochasticMatrix& p) noexcept {
  return 1e-12 * static_cast<double>(p.size()) * std::max(p.minus_identity().norm_inf(), 1.0);
}

Elimination eliminate(DenseMatrix a, double pivot_tol) {
  if (!(pivot_tol >= 0.0)) throw std::invalid_argument("pivot_tol must be >= 0");
  const std::size_t n = a.size();
  Elimination out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (row == n) {
      out.free_columns.push_back(col);
      continue;
    }
    std::size_t best = row;
    for (std::size_t r = row + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    if (!(std::abs(a(best, col)) > pivot_tol)) {
      out.free_columns.push_back(col);
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(best, c), a(row, c));

    const double pivot = a(row, col);
    for (std::size_t c = col; c < n; ++c) a(row, c) /= pivot;
    a(row, col) = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(row, c);
      a(r, col) = 0.0;
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

KernelBasis kernel_basis(const DenseMatrix& m, std::optional<double> pivot_tol) {
  const std::size_t n = m.size();
  const Elimination e = eliminate(m, pivot_tol.value_or(default_pivot_tol(m)));

  KernelBasis basis;
  basis.dimension = e.free_columns.size();
  for (std::size_t f : e.free_columns) {
    RowVector x(n, 0.0);
    x[f] = 1.0;
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_columns[r]] = -e.reduced(r, f);
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (double& v : x) v /= scale;
    basis.vectors.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_of(const DenseMatrix& m, std::optional<double> pivot_tol) {
  return eliminate(m, pivot_tol.value_or(default_pivot_tol(m))).rank();
}

std::size_t rank_of_P_minus_I(const StochasticMatrix& p, std::optional<double> pivot_tol) {
  return rank_of(p.minus_identity(), pivot_tol.value_or(stochastic_pivot_tol(p)));
}

}  // namespace stationary
