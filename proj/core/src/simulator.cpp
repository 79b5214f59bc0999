#include "stationary/simulator.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "stationary/errors.hpp"
#include "stationary/random.hpp"

namespace stationary {

RowCdf::RowCdf(const StochasticMatrix& p) : n_(p.size()), cdf_(n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    std::size_t last_positive = n_ - 1;
    for (std::size_t j = 0; j < n_; ++j) {
      acc += p(i, j);
      cdf_[i * n_ + j] = acc;
      if (p(i, j) > 0.0) last_positive = j;
    }
    for (std::size_t j = last_positive; j < n_; ++j) cdf_[i * n_ + j] = 1.0;
  }
}

std::size_t RowCdf::next_state(std::size_t i, double draw) const noexcept {
  const auto first = cdf_.begin() + static_cast<std::ptrdiff_t>(i * n_);
  const auto last = first + static_cast<std::ptrdiff_t>(n_);
  const auto it = std::upper_bound(first, last, draw);
  return std::min(static_cast<std::size_t>(it - first), n_ - 1);
}

namespace {

void run_path(const RowCdf& cdf, std::size_t start, std::size_t steps, Rng& rng,
              std::vector<std::uint64_t>& counts) {
  std::size_t state = start;
  for (std::size_t s = 0; s < steps; ++s) {
    state = cdf.next_state(state, rng.uniform());
    ++counts[state];
  }
}

void check_args(const StochasticMatrix& p, std::size_t start, std::size_t steps) {
  if (start >= p.size()) throw IndexOutOfRange(start, p.size());
  if (steps == 0) throw std::invalid_argument("steps must be >= 1");
}

}  // namespace

TrajectoryStats sample_trajectory(const StochasticMatrix& p, std::size_t start, std::size_t steps,
                                  std::uint64_t seed) {
  check_args(p, start, steps);
  const RowCdf cdf(p);
  Rng rng(seed);
  TrajectoryStats stats{steps, start, seed, std::vector<std::uint64_t>(p.size(), 0)};
  run_path(cdf, start, steps, rng, stats.counts);
  return stats;
}

TrajectoryStats sample_trajectories(const StochasticMatrix& p, std::size_t start,
                                    std::size_t steps_per_trajectory, std::uint64_t seed,
                                    std::size_t trajectories) {
  check_args(p, start, steps_per_trajectory);
  if (trajectories == 0) throw std::invalid_argument("trajectories must be >= 1");
  const RowCdf cdf(p);

  std::vector<std::future<std::vector<std::uint64_t>>> jobs;
  jobs.reserve(trajectories);
  for (std::size_t t = 0; t < trajectories; ++t) {
    jobs.push_back(std::async(std::launch::async, [&cdf, start, steps_per_trajectory, seed, t] {
      Rng rng(seed, t);
      std::vector<std::uint64_t> counts(cdf.size(), 0);
      run_path(cdf, start, steps_per_trajectory, rng, counts);
      return counts;
    }));
  }
  TrajectoryStats merged{steps_per_trajectory * trajectories, start, seed,
                         std::vector<std::uint64_t>(p.size(), 0)};
  for (auto& job : jobs) {
    const auto counts = job.get();
    for (std::size_t i = 0; i < counts.size(); ++i) merged.counts[i] += counts[i];
  }
  return merged;
}

ProbabilityVector empirical_distribution(const TrajectoryStats& stats) {
  if (stats.steps == 0) throw std::invalid_argument("steps must be >= 1");
  RowVector freq(stats.counts.size());
  const double total = static_cast<double>(stats.steps);
  for (std::size_t i = 0; i < freq.size(); ++i) freq[i] = static_cast<double>(stats.counts[i]) / total;
  return ProbabilityVector(std::move(freq));
}

}  // namespace stationary
