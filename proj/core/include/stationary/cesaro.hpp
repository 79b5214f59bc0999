#pragma once

#include <cstddef>
#include <optional>

#include "stationary/direct_solver.hpp"
#include "stationary/stochastic_matrix.hpp"

namespace stationary {

inline constexpr double kDefaultCesaroEps = 1e-10;

/// State of the Cesaro sequence v_k = (u + uP + ... + uP^{k-1}) / k started
/// from the uniform vector u.
///
/// running_sum is kept with Kahan compensation in `compensation`; the
/// partial sum is running_sum - compensation.
struct CesaroState {
  std::size_t k = 0;
  RowVector start;         // u
  RowVector power_vec;     // u P^k
  RowVector running_sum;   // u + u P + ... + u P^{k-1}
  RowVector compensation;
  ProbabilityVector average;  // running_sum / k
};

/// State at k = 1: power_vec = uP, running_sum = u, average = u.
CesaroState cesaro_init(const StochasticMatrix& p);

/// Advances k by one. Throws DimensionMismatch if the state does not match P.
CesaroState step(const CesaroState& state, const StochasticMatrix& p);

/// Guaranteed ceiling 2/k on ||v_k P - v_k||_inf. Requires k >= 1.
double residual_bound(std::size_t k);

/// max(1e7, ceil(2/eps)).
std::size_t default_max_k(double eps);

struct CesaroOptions {
  double eps = kDefaultCesaroEps;
  std::optional<std::size_t> max_k;  // defaults to default_max_k(eps)
  /// Jump over blocks of steps that a contraction bound proves cannot meet
  /// the stopping rule. Stops where plain stepping does, up to rounding at the crossing.
  bool block_skipping = true;
};

/// Block length used by block skipping for an n-state chain.
std::size_t skip_block_length(std::size_t n);

/// Iterates the Cesaro averages until residual_norm(v_k, P) <= eps.
/// Throws MaxIterationsExceeded when max_k is reached first.
StationarySolution cesaro_solve(const StochasticMatrix& p, CesaroOptions opts = {});

}  // namespace stationary
