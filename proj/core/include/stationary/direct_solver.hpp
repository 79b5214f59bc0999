#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "stationary/elimination.hpp"
#include "stationary/stochastic_matrix.hpp"

namespace stationary {

enum class Method { direct, cesaro };

std::string_view to_string(Method m) noexcept;

struct SolveReport {
  Method method = Method::direct;
  std::size_t iterations = 0;
  /// ||pi P - pi||_inf
  double residual = 0.0;
  /// min_i pi(i), as computed.
  double positivity_margin = 0.0;
  /// Dimension of the kernel of (P - I)^T; 0 when the method does not compute it.
  std::size_t kernel_dimension = 0;
};

struct StationarySolution {
  ProbabilityVector pi;
  SolveReport report;
};

struct DirectOptions {
  std::optional<double> pivot_tol;  // defaults to stochastic_pivot_tol(P)
  double positivity_tol = 0.0;
};

/// Stationary distribution from the one-dimensional kernel of (P - I)^T.
///
/// Throws NotUniqueStationary when the kernel dimension is not 1, and
/// NonPositiveEntry when the normalized kernel vector has an entry
/// <= positivity_tol.
StationarySolution solve_stationary_direct(const StochasticMatrix& p, DirectOptions opts = {});

/// Returns min_i pi(i); throws NonPositiveEntry for the first i with pi(i) <= positivity_tol.
double verify_strict_positivity(const ProbabilityVector& pi, double positivity_tol = 0.0);

}  // namespace stationary
