#include "doctest.h"
#include "oracles.hpp"
#include "random_support.hpp"
#include "stationary/errors.hpp"
#include "stationary/irreducibility.hpp"
#include "stationary/testkit.hpp"

using namespace stationary;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> edges_of(const AdjacencyGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.edge(i, j)) out.emplace_back(i, j);
  return out;
}

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST_CASE("build_graph keeps entries above the threshold") {
  CHECK(edges_of(build_graph(StochasticMatrix::validate({{0, 1}, {1, 0}}))) == Edges{{0, 1}, {1, 0}});
  CHECK(edges_of(build_graph(StochasticMatrix::identity(2))) == Edges{{0, 0}, {1, 1}});
  const auto p = StochasticMatrix::validate({{0.5, 0.5}, {1e-12, 1}});
  CHECK(edges_of(build_graph(p, 1e-9)) == Edges{{0, 0}, {0, 1}, {1, 1}});
  CHECK(build_graph(p).edge_count() == 4);
  CHECK_THROWS_AS(build_graph(p, -1.0), std::invalid_argument);
}

TEST_CASE("is_irreducible verdicts and witnesses") {
  const auto id = is_irreducible(StochasticMatrix::identity(2));
  CHECK_FALSE(id.verdict);
  REQUIRE(id.witness);
  CHECK(*id.witness == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_FALSE(id.min_powers);

  const auto swap = is_irreducible(StochasticMatrix::validate({{0, 1}, {1, 0}}));
  CHECK(swap.verdict);
  CHECK_FALSE(swap.witness);
  CHECK_FALSE(swap.min_powers);

  const auto absorbing = is_irreducible(StochasticMatrix::validate({{0.5, 0.5}, {0, 1}}));
  CHECK_FALSE(absorbing.verdict);
  REQUIRE(absorbing.witness);
  CHECK(*absorbing.witness == std::pair<std::size_t, std::size_t>{1, 0});

  CHECK(is_irreducible(StochasticMatrix::identity(1)).verdict);
}

TEST_CASE("min_positive_power") {
  const auto swap = StochasticMatrix::validate({{0, 1}, {1, 0}});
  CHECK(min_positive_power(swap, 0, 0) == 2);

  const auto cycle3 = testkit::generate({testkit::FixtureKind::cycle, 3});
  const auto oracle_table = oracle::min_powers_by_boolean_powers(oracle::support(cycle3.rows()), 6);
  REQUIRE(oracle_table[0][2] == 2);
  CHECK(min_positive_power(cycle3, 0, 2) == 2);

  CHECK_FALSE(min_positive_power(StochasticMatrix::identity(2), 0, 1));
  CHECK_THROWS_AS(min_positive_power(swap, 2, 0), IndexOutOfRange);
  CHECK_THROWS_AS(min_positive_power(swap, 0, 5), IndexOutOfRange);
}

TEST_CASE("full certificate carries the min power table") {
  const auto cert = is_irreducible(testkit::generate({testkit::FixtureKind::cycle, 3}),
                                   {0.0, true});
  REQUIRE(cert.min_powers);
  const MinPowerTable expected{{3, 1, 2}, {2, 3, 1}, {1, 2, 3}};
  CHECK(*cert.min_powers == expected);
}

TEST_CASE("property: BFS agrees with brute-force boolean powers") {
  Rng rng(2024);
  int irreducible_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const double density = 0.1 + 0.5 * rng.uniform();
    const auto p = fixtures::random_support_matrix(n, density, rng);
    const auto expected = oracle::min_powers_by_boolean_powers(oracle::support(p.rows()), 2 * n);

    const auto table = min_positive_power_table(build_graph(p));
    CHECK(table == expected);

    bool all = true;
    for (const auto& row : expected)
      for (const auto& k : row) all = all && k.has_value();

    const auto cert = is_irreducible(p, {0.0, true});
    CHECK(cert.verdict == all);
    if (cert.verdict) {
      ++irreducible_seen;
      REQUIRE(cert.min_powers);
      for (const auto& row : *cert.min_powers)
        for (const auto& k : row) {
          REQUIRE(k);
          CHECK(*k >= 1);
          CHECK(*k <= 2 * n);
        }
      // Double-BFS equivalence: 0 reaches everyone and everyone reaches 0.
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(expected[0][i].has_value());
        CHECK(expected[i][0].has_value());
      }
    } else {
      REQUIRE(cert.witness);
      const auto [i, j] = *cert.witness;
      CHECK_FALSE(expected[i][j].has_value());
      // Reachability needs at most n steps, so no longer power can help.
      const auto longer = oracle::min_powers_by_boolean_powers(oracle::support(p.rows()), 4 * n);
      CHECK_FALSE(longer[i][j].has_value());
    }
  }
  CHECK(irreducible_seen > 20);
}

TEST_CASE("periodic cycles are irreducible") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto p = testkit::generate({testkit::FixtureKind::cycle, n});
    const auto cert = is_irreducible(p, {0.0, true});
    CHECK(cert.verdict);
    REQUIRE(cert.min_powers);
    for (std::size_t i = 0; i < n; ++i) CHECK((*cert.min_powers)[i][i] == n);
  }
}

TEST_CASE("threshold can break irreducibility") {
  const auto p = StochasticMatrix::validate({{0.5, 0.5}, {1e-12, 1 - 1e-12}});
  CHECK(is_irreducible(p).verdict);
  const auto cert = is_irreducible(p, {1e-9, false});
  CHECK_FALSE(cert.verdict);
  CHECK(*cert.witness == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("large graphs use the concurrent table path") {
  const auto p = testkit::generate({testkit::FixtureKind::cycle, 300});
  const auto table = min_positive_power_table(build_graph(p));
  CHECK(table[0][299] == 299);
  CHECK(table[299][0] == 1);
  CHECK(table[17][17] == 300);
}
