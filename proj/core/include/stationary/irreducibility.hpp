#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stationary/stochastic_matrix.hpp"

namespace stationary {

/// Support graph of a stochastic matrix: edge i -> j iff p(i,j) > threshold.
class AdjacencyGraph {
public:
  AdjacencyGraph(std::size_t n, std::vector<char> edges);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool edge(std::size_t i, std::size_t j) const noexcept {
    return edges_[i * n_ + j] != 0;
  }
  [[nodiscard]] std::size_t edge_count() const noexcept;
  [[nodiscard]] const std::vector<std::size_t>& successors(std::size_t i) const noexcept {
    return succ_[i];
  }
  [[nodiscard]] const std::vector<std::size_t>& predecessors(std::size_t i) const noexcept {
    return pred_[i];
  }

private:
  std::size_t n_;
  std::vector<char> edges_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
};

AdjacencyGraph build_graph(const StochasticMatrix& p, double pos_threshold = 0.0);

/// Table of minimal k >= 1 with P^k(i,j) > 0; nullopt where j is unreachable from i.
using MinPowerTable = std::vector<std::vector<std::optional<std::size_t>>>;

struct IrreducibilityCertificate {
  bool verdict = false;
  /// Populated only when irreducible and requested.
  std::optional<MinPowerTable> min_powers;
  /// Populated only when reducible: no directed path from first to second.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct IrreducibilityOptions {
  double pos_threshold = 0.0;
  /// Compute the full min_powers table (n BFS passes) when the verdict is true.
  bool with_min_powers = false;
};

/// Strong connectivity of the support graph, via forward and reverse BFS from state 0.
IrreducibilityCertificate is_irreducible(const StochasticMatrix& p,
                                         IrreducibilityOptions opts = {});
IrreducibilityCertificate is_irreducible(const AdjacencyGraph& g, bool with_min_powers = false);

/// Length of the shortest walk of length >= 1 from i to j; nullopt if none.
/// Throws IndexOutOfRange.
std::optional<std::size_t> min_positive_power(const StochasticMatrix& p, std::size_t i,
                                              std::size_t j, double pos_threshold = 0.0);

/// Shortest walk lengths (>= 1) from `source` to every state.
std::vector<std::optional<std::size_t>> min_positive_powers_from(const AdjacencyGraph& g,
                                                                 std::size_t source);

MinPowerTable min_positive_power_table(const AdjacencyGraph& g);

}  // namespace stationary
