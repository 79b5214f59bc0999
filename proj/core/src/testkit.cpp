#include "stationary/testkit.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "stationary/errors.hpp"
#include "stationary/random.hpp"

namespace stationary::testkit {

namespace {

constexpr std::array kAllKinds{
    FixtureKind::random_dense,     FixtureKind::random_sparse_irreducible,
    FixtureKind::cycle,            FixtureKind::doubly_stochastic,
    FixtureKind::reducible_blocks, FixtureKind::near_reducible,
};

using Rows = std::vector<std::vector<double>>;

constexpr double kMinCycleMass = 0.1;
constexpr double kSparseDensity = 0.3;

void normalize_row(std::vector<double>& row, std::size_t begin, std::size_t end, double mass) {
  double s = 0.0;
  for (std::size_t j = begin; j < end; ++j) s += row[j];
  for (std::size_t j = begin; j < end; ++j) row[j] = row[j] / s * mass;
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

Rows random_dense(std::size_t n, Rng& rng) {
  Rows rows(n, std::vector<double>(n));
  for (auto& row : rows) {
    for (double& x : row) x = rng.uniform_open_zero();
    normalize_row(row, 0, n, 1.0);
  }
  return rows;
}

Rows random_sparse_irreducible(std::size_t n, Rng& rng) {
  Rows rows(n, std::vector<double>(n, 0.0));
  const auto order = random_permutation(n, rng);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t i = order[t];
    const std::size_t target = order[(t + 1) % n];
    auto& row = rows[i];
    bool sprinkled = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == target) continue;
      if (rng.uniform() < kSparseDensity) {
        row[j] = rng.uniform_open_zero();
        sprinkled = true;
      }
    }
    if (!sprinkled) {
      row[target] = 1.0;
      continue;
    }
    const double cycle_mass = kMinCycleMass + 0.5 * rng.uniform();
    normalize_row(row, 0, n, 1.0 - cycle_mass);
    row[target] = cycle_mass;
  }
  return rows;
}

Rows cycle(std::size_t n) {
  Rows rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) rows[i][(i + 1) % n] = 1.0;
  return rows;
}

Rows doubly_stochastic(std::size_t n, Rng& rng) {
  Rows rows(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  perms.push_back(std::move(shift));
  for (std::size_t m = 0; m < n; ++m) perms.push_back(random_permutation(n, rng));

  std::vector<double> weights(perms.size());
  for (double& w : weights) w = rng.uniform_open_zero();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (std::size_t m = 0; m < perms.size(); ++m)
    for (std::size_t i = 0; i < n; ++i) rows[i][perms[m][i]] += weights[m] / total;
  return rows;
}

std::vector<std::size_t> block_bounds(std::size_t n, std::size_t blocks) {
  std::vector<std::size_t> bounds{0};
  for (std::size_t b = 0; b < blocks; ++b) bounds.push_back(bounds.back() + n / blocks + (b < n % blocks ? 1 : 0));
  return bounds;
}

Rows reducible_blocks(std::size_t n, Rng& rng) {
  const std::size_t blocks = n < 6 ? 2 : 2 + rng.below(2);
  const auto bounds = block_bounds(n, blocks);
  Rows rows(n, std::vector<double>(n, 0.0));
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = bounds[b]; i < bounds[b + 1]; ++i) {
      for (std::size_t j = bounds[b]; j < bounds[b + 1]; ++j) rows[i][j] = rng.uniform_open_zero();
      normalize_row(rows[i], bounds[b], bounds[b + 1], 1.0);
    }
  }
  return rows;
}

Rows near_reducible(std::size_t n, double coupling, Rng& rng) {
  const std::size_t split = n / 2;
  Rows rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = rows[i];
    for (double& x : row) x = rng.uniform_open_zero();
    const bool upper = i < split;
    const std::size_t in_begin = upper ? 0 : split, in_end = upper ? split : n;
    const std::size_t out_begin = upper ? split : 0, out_end = upper ? n : split;
    normalize_row(row, in_begin, in_end, 1.0 - coupling);
    normalize_row(row, out_begin, out_end, coupling);
  }
  return rows;
}

}  // namespace

std::string_view to_string(FixtureKind kind) noexcept {
  switch (kind) {
    case FixtureKind::random_dense: return "random_dense";
    case FixtureKind::random_sparse_irreducible: return "random_sparse_irreducible";
    case FixtureKind::cycle: return "cycle";
    case FixtureKind::doubly_stochastic: return "doubly_stochastic";
    case FixtureKind::reducible_blocks: return "reducible_blocks";
    case FixtureKind::near_reducible: return "near_reducible";
  }
  return "unknown";
}

std::optional<FixtureKind> parse_fixture_kind(std::string_view name) noexcept {
  for (FixtureKind k : kAllKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::span<const FixtureKind> all_fixture_kinds() noexcept { return kAllKinds; }

StochasticMatrix generate(const FixtureSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw InvalidSpec("fixture size n must be >= 1");
  if (!(spec.coupling >= 0.0 && spec.coupling <= 1.0))
    throw InvalidSpec("coupling must lie in [0, 1]");
  const bool needs_blocks =
      spec.kind == FixtureKind::reducible_blocks || spec.kind == FixtureKind::near_reducible;
  if (needs_blocks && n < 2)
    throw InvalidSpec(std::string(to_string(spec.kind)) + " requires n >= 2");

  Rng rng(spec.seed, static_cast<std::uint64_t>(spec.kind));
  Rows rows;
  switch (spec.kind) {
    case FixtureKind::random_dense: rows = random_dense(n, rng); break;
    case FixtureKind::random_sparse_irreducible: rows = random_sparse_irreducible(n, rng); break;
    case FixtureKind::cycle: rows = cycle(n); break;
    case FixtureKind::doubly_stochastic: rows = doubly_stochastic(n, rng); break;
    case FixtureKind::reducible_blocks: rows = reducible_blocks(n, rng); break;
    case FixtureKind::near_reducible: rows = near_reducible(n, spec.coupling, rng); break;
  }
  return StochasticMatrix::validate(rows);
}

}  // namespace stationary::testkit
