#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stationary/stochastic_matrix.hpp"

namespace stationary {

inline constexpr std::uint64_t kDefaultSimulationSeed = 20231017;

struct TrajectoryStats {
  std::size_t steps = 0;
  std::size_t start = 0;
  std::uint64_t seed = 0;
  /// Visits per state, counting the state after each transition.
  std::vector<std::uint64_t> counts;
};

/// Per-row cumulative sums for inverse-CDF sampling. The last positive entry
/// of each row and everything after it is pinned to exactly 1.
class RowCdf {
public:
  explicit RowCdf(const StochasticMatrix& p);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  /// First j with draw < cdf(i, j); draw in [0, 1).
  [[nodiscard]] std::size_t next_state(std::size_t i, double draw) const noexcept;

private:
  std::size_t n_;
  std::vector<double> cdf_;
};

/// Simulates one trajectory. Throws IndexOutOfRange for a bad start and
/// std::invalid_argument when steps == 0.
TrajectoryStats sample_trajectory(const StochasticMatrix& p, std::size_t start, std::size_t steps,
                                  std::uint64_t seed);

/// Runs `trajectories` independent paths concurrently; path t uses the
/// generator stream (seed, t). Counts are merged; `steps` in the result is the total.
TrajectoryStats sample_trajectories(const StochasticMatrix& p, std::size_t start,
                                    std::size_t steps_per_trajectory, std::uint64_t seed,
                                    std::size_t trajectories);

/// counts / steps.
ProbabilityVector empirical_distribution(const TrajectoryStats& stats);

}  // namespace stationary
