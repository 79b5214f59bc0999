#include "stationary/direct_solver.hpp"

#include <algorithm>
#include <numeric>

#include "stationary/errors.hpp"

namespace stationary {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::direct: return "direct";
    case Method::cesaro: return "cesaro";
  }
  return "unknown";
}

namespace {

double min_entry(std::span<const double> v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

StationarySolution solve_stationary_direct(const StochasticMatrix& p, DirectOptions opts) {
  const std::size_t n = p.size();
  if (n == 1) {
    ProbabilityVector pi(RowVector{1.0});
    return {pi, SolveReport{Method::direct, 0, residual_norm(pi.values(), p), 1.0, 1}};
  }

  // vP = v  <=>  (P - I)^T v^T = 0
  const DenseMatrix m = p.minus_identity().transposed();
  const KernelBasis basis = kernel_basis(m, opts.pivot_tol.value_or(stochastic_pivot_tol(p)));
  if (basis.dimension != 1) throw NotUniqueStationary(basis.dimension);

  // Dividing by the entry sum also fixes an all-negative sign.
  RowVector v = basis.vectors.front();
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (total == 0.0) {
    const auto it = std::min_element(v.begin(), v.end());
    throw NonPositiveEntry(static_cast<std::size_t>(it - v.begin()), *it);
  }
  for (double& x : v) x /= total;
  for (std::size_t i = 0; i < n; ++i)
    if (!(v[i] > opts.positivity_tol)) throw NonPositiveEntry(i, v[i]);

  ProbabilityVector pi(std::move(v));
  SolveReport report;
  report.method = Method::direct;
  report.iterations = 0;
  report.residual = residual_norm(pi.values(), p);
  report.positivity_margin = min_entry(pi.values());
  report.kernel_dimension = basis.dimension;
  return {std::move(pi), report};
}

double verify_strict_positivity(const ProbabilityVector& pi, double positivity_tol) {
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (!(pi[i] > positivity_tol)) throw NonPositiveEntry(i, pi[i]);
  return min_entry(pi.values());
}

}  // namespace stationary
