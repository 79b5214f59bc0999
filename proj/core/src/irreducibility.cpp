#include "stationary/irreducibility.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <stdexcept>

#include "stationary/errors.hpp"

namespace stationary {

namespace {

// Marks every state reachable from `root` (including root) following `next`.
template <typename Next>
std::vector<char> reach(std::size_t n, std::size_t root, Next next) {
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : next(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

AdjacencyGraph::AdjacencyGraph(std::size_t n, std::vector<char> edges)
    : n_(n), edges_(std::move(edges)), succ_(n), pred_(n) {
  if (edges_.size() != n_ * n_) throw DimensionMismatch(n_ * n_, edges_.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (edge(i, j)) {
        succ_[i].push_back(j);
        pred_[j].push_back(i);
      }
}

std::size_t AdjacencyGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(edges_.begin(), edges_.end(), char{1}));
}

AdjacencyGraph build_graph(const StochasticMatrix& p, double pos_threshold) {
  if (!(pos_threshold >= 0.0)) throw std::invalid_argument("pos_threshold must be >= 0");
  const std::size_t n = p.size();
  std::vector<char> edges(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) edges[i * n + j] = p(i, j) > pos_threshold ? 1 : 0;
  return AdjacencyGraph(n, std::move(edges));
}

std::vector<std::optional<std::size_t>> min_positive_powers_from(const AdjacencyGraph& g,
                                                                 std::size_t source) {
  const std::size_t n = g.size();
  if (source >= n) throw IndexOutOfRange(source, n);
  // BFS seeded with the one-step successors so that the walk back to the
  // source itself has length >= 1.
  std::vector<std::optional<std::size_t>> dist(n);
  std::deque<std::size_t> queue;
  for (std::size_t v : g.successors(source)) {
    dist[v] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.successors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

MinPowerTable min_positive_power_table(const AdjacencyGraph& g) {
  const std::size_t n = g.size();
  MinPowerTable table(n);
  // Each source is an independent BFS over a shared read-only graph.
  constexpr std::size_t kParallelThreshold = 256;
  if (n >= kParallelThreshold) {
    std::vector<std::future<std::vector<std::optional<std::size_t>>>> jobs;
    jobs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      jobs.push_back(std::async(std::launch::async, [&g, i] {
        return min_positive_powers_from(g, i);
      }));
    for (std::size_t i = 0; i < n; ++i) table[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < n; ++i) table[i] = min_positive_powers_from(g, i);
  }
  return table;
}

IrreducibilityCertificate is_irreducible(const AdjacencyGraph& g, bool with_min_powers) {
  const std::size_t n = g.size();
  IrreducibilityCertificate cert;

  const auto forward = reach(n, 0, [&g](std::size_t u) -> const auto& { return g.successors(u); });
  for (std::size_t j = 0; j < n; ++j)
    if (!forward[j]) {
      cert.witness = std::pair{std::size_t{0}, j};
      return cert;
    }
  const auto backward =
      reach(n, 0, [&g](std::size_t u) -> const auto& { return g.predecessors(u); });
  for (std::size_t i = 0; i < n; ++i)
    if (!backward[i]) {
      cert.witness = std::pair{i, std::size_t{0}};
      return cert;
    }

  cert.verdict = true;
  if (with_min_powers) cert.min_powers = min_positive_power_table(g);
  return cert;
}

IrreducibilityCertificate is_irreducible(const StochasticMatrix& p, IrreducibilityOptions opts) {
  return is_irreducible(build_graph(p, opts.pos_threshold), opts.with_min_powers);
}

std::optional<std::size_t> min_positive_power(const StochasticMatrix& p, std::size_t i,
                                              std::size_t j, double pos_threshold) {
  const std::size_t n = p.size();
  if (i >= n) throw IndexOutOfRange(i, n);
  if (j >= n) throw IndexOutOfRange(j, n);
  return min_positive_powers_from(build_graph(p, pos_threshold), i)[j];
}

}  // namespace stationary
