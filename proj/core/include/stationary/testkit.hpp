#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "stationary/stochastic_matrix.hpp"

namespace stationary::testkit {

enum class FixtureKind {
  random_dense,               // all entries > 0
  random_sparse_irreducible,  // planted Hamiltonian cycle (mass >= 0.1 per edge) plus random support
  cycle,                      // i -> i+1 mod n
  doubly_stochastic,          // mixture of the n-cycle and n random permutations
  reducible_blocks,           // block diagonal, 2 blocks (3 possible for n >= 6)
  near_reducible,             // two dense blocks with `coupling` off-block mass per row
};

inline constexpr double kDefaultCoupling = 1e-6;

std::string_view to_string(FixtureKind kind) noexcept;
std::optional<FixtureKind> parse_fixture_kind(std::string_view name) noexcept;
std::span<const FixtureKind> all_fixture_kinds() noexcept;

struct FixtureSpec {
  FixtureKind kind = FixtureKind::random_dense;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  double coupling = kDefaultCoupling;
};

/// Deterministic in (kind, n, seed, coupling). Throws InvalidSpec.
StochasticMatrix generate(const FixtureSpec& spec);

}  // namespace stationary::testkit
