#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "stationary/errors.hpp"
#include "stationary/random.hpp"
#include "stationary/stochastic_matrix.hpp"
#include "stationary/testkit.hpp"

using namespace stationary;
using doctest::Approx;

namespace {

const auto kSwap = [] { return StochasticMatrix::validate({{0, 1}, {1, 0}}); };

StochasticMatrix random_fixture(std::uint64_t seed, std::size_t n) {
  const auto kinds = testkit::all_fixture_kinds();
  const auto kind = kinds[seed % kinds.size()];
  return testkit::generate({kind, std::max<std::size_t>(n, 2), seed, 0.01});
}

}  // namespace

TEST_CASE("validate accepts exact row sums") {
  const auto p = StochasticMatrix::validate({{0.5, 0.5}, {0.25, 0.75}}, {1e-9});
  CHECK(p.size() == 2);
  CHECK(p(1, 1) == 0.75);
}

TEST_CASE("validate reports the first negative entry") {
  try {
    StochasticMatrix::validate({{1.1, -0.1}, {0.0, 1.0}}, {1e-9});
    FAIL("expected NegativeEntry");
  } catch (const NegativeEntry& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.value == -0.1);
  }
}

TEST_CASE("validate reports a row sum outside the band") {
  try {
    StochasticMatrix::validate({{0.6, 0.399}, {0.5, 0.5}}, {1e-9});
    FAIL("expected RowSumViolation");
  } catch (const RowSumViolation& e) {
    CHECK(e.row == 0);
    CHECK(e.sum == Approx(0.999).epsilon(1e-12));
  }
}

TEST_CASE("validate rejects non-square and empty input") {
  CHECK_THROWS_AS(StochasticMatrix::validate(std::vector<std::vector<double>>{{1.0, 0.0}}),
                  NotSquare);
  CHECK_THROWS_AS(StochasticMatrix::validate(std::vector<std::vector<double>>{}), NotSquare);
  CHECK_THROWS_AS(
      StochasticMatrix::validate(std::vector<std::vector<double>>{{0.5, 0.5}, {1.0}}), NotSquare);
  CHECK_THROWS_AS(StochasticMatrix::validate({{1.0}}, {0.0}), std::invalid_argument);
}

TEST_CASE("NaN entries never pass") {
  CHECK_THROWS_AS(StochasticMatrix::validate({{std::nan(""), 1.0}, {0.0, 1.0}}), RowSumViolation);
}

TEST_CASE("renormalize only applies inside the tolerance band") {
  const std::vector<std::vector<double>> raw{{0.5, 0.5 + 4e-10}, {0.3, 0.7}};
  const auto kept = StochasticMatrix::validate(raw, {1e-9, false});
  CHECK(kept(0, 1) == 0.5 + 4e-10);

  const auto renorm = StochasticMatrix::validate(raw, {1e-9, true});
  CHECK(renorm(0, 0) + renorm(0, 1) == Approx(1.0).epsilon(1e-16));
  CHECK(renorm(0, 0) < 0.5);

  CHECK_THROWS_AS(StochasticMatrix::validate({{0.5, 0.6}, {0.3, 0.7}}, {1e-9, true}),
                  RowSumViolation);
}

TEST_CASE("vec_mat_mul") {
  const auto id = StochasticMatrix::identity(2);
  CHECK(vec_mat_mul(RowVector{0.5, 0.5}, id) == RowVector{0.5, 0.5});
  CHECK(vec_mat_mul(RowVector{1, 0}, kSwap()) == RowVector{0, 1});

  const auto ds = StochasticMatrix::validate({{0.2, 0.3, 0.5}, {0.5, 0.2, 0.3}, {0.3, 0.5, 0.2}});
  const RowVector u(3, 1.0 / 3.0);
  const RowVector out = vec_mat_mul(u, ds);
  for (double x : out) CHECK(x == Approx(1.0 / 3.0).epsilon(1e-15));

  CHECK_THROWS_AS(vec_mat_mul(RowVector{1.0}, kSwap()), DimensionMismatch);
}

TEST_CASE("mat_mul") {
  CHECK(mat_mul(kSwap(), kSwap()) == StochasticMatrix::identity(2));

  const auto p = StochasticMatrix::validate({{0.7, 0.3}, {0.4, 0.6}});
  CHECK(mat_mul(StochasticMatrix::identity(2), p) == p);

  // Hand multiplication, cross-checked against the naive oracle product.
  const auto sq = mat_mul(p, p);
  const oracle::Mat expected{{0.61, 0.39}, {0.52, 0.48}};
  const auto naive = oracle::mul(p.rows(), p.rows());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(sq(i, j) == Approx(expected[i][j]).epsilon(1e-15));
      CHECK(naive[i][j] == Approx(expected[i][j]).epsilon(1e-15));
    }

  CHECK_THROWS_AS(mat_mul(p, StochasticMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("residual_norm") {
  CHECK(residual_norm(RowVector{0.5, 0.5}, kSwap()) == 0.0);
  CHECK(residual_norm(RowVector{1, 0}, kSwap()) == 1.0);
  const auto p = StochasticMatrix::validate({{0.7, 0.3}, {0.6, 0.4}});
  CHECK(residual_norm(RowVector{2.0 / 3.0, 1.0 / 3.0}, p) <= 1e-16);
  CHECK_THROWS_AS(residual_norm(RowVector{1, 0, 0}, p), DimensionMismatch);
}

TEST_CASE("ProbabilityVector invariants") {
  CHECK_NOTHROW(ProbabilityVector(RowVector{0.25, 0.75}));
  CHECK_THROWS_AS(ProbabilityVector(RowVector{1.5, -0.5}), InvalidDistribution);
  CHECK_THROWS_AS(ProbabilityVector(RowVector{0.5, 0.4}), InvalidDistribution);
  CHECK_THROWS_AS(ProbabilityVector(RowVector{}), InvalidDistribution);
  const auto u = ProbabilityVector::uniform(4);
  CHECK(u[3] == 0.25);
}

TEST_CASE("property: products of stochastic matrices validate") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const auto a = random_fixture(seed, n);
    const auto b = random_fixture(seed + 1000, n);
    const auto c = mat_mul(a, b);
    CHECK_NOTHROW(StochasticMatrix::validate(c.rows(), {1e-9}));
  }
}

TEST_CASE("property: vec_mat_mul conserves mass") {
  Rng rng(7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto p = random_fixture(seed, n);
    RowVector v(p.size());
    for (double& x : v) x = rng.uniform_open_zero();
    const double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= total;
    const RowVector w = vec_mat_mul(v, p);
    CHECK(std::accumulate(w.begin(), w.end(), 0.0) == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: P^(n*n) stays stochastic on irreducible fixtures") {
  using testkit::FixtureKind;
  for (auto kind : {FixtureKind::random_dense, FixtureKind::random_sparse_irreducible,
                    FixtureKind::cycle, FixtureKind::doubly_stochastic}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto p = testkit::generate({kind, n, 11 * n});
      const auto pk = mat_pow(p, n * n);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(pk(i, j) >= 0.0);
          s += pk(i, j);
        }
        CHECK(std::abs(s - 1.0) <= 1e-9);
      }
    }
  }
}
