#include "stationary/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>
#include <stdexcept>

#include "stationary/errors.hpp"

namespace stationary {

namespace {

// Kahan-compensated sum += x. The exact partial sum is sum - comp.
inline void compensated_add(double& sum, double& comp, double x) noexcept {
  const double y = x - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

RowVector average_of(const RowVector& sum, const RowVector& comp, std::size_t k) {
  RowVector avg(sum.size());
  const double kk = static_cast<double>(k);
  for (std::size_t i = 0; i < sum.size(); ++i) avg[i] = (sum[i] - comp[i]) / kk;
  return avg;
}

// out = v P for one step, four columns at a time with register accumulators.
void advance(const double* __restrict v, const double* __restrict p, double* __restrict out,
             std::size_t n) noexcept {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = v[i];
      const double* r = p + i * n + j;
      a0 += vi * r[0];
      a1 += vi * r[1];
      a2 += vi * r[2];
      a3 += vi * r[3];
    }
    out[j] = a0;
    out[j + 1] = a1;
    out[j + 2] = a2;
    out[j + 3] = a3;
  }
  for (; j < n; ++j) {
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) a += v[i] * p[i * n + j];
    out[j] = a;
  }
}

// Averages can carry mass 1 +- a few ulps after long runs.
constexpr double kAverageSumTol = 1e-9;

}  // namespace

CesaroState cesaro_init(const StochasticMatrix& p) {
  const std::size_t n = p.size();
  RowVector u(n, 1.0 / static_cast<double>(n));
  RowVector pv = vec_mat_mul(u, p);
  return CesaroState{1, u, std::move(pv), u, RowVector(n, 0.0), ProbabilityVector(u)};
}

CesaroState step(const CesaroState& state, const StochasticMatrix& p) {
  const std::size_t n = p.size();
  if (state.power_vec.size() != n) throw DimensionMismatch(n, state.power_vec.size());
  if (state.running_sum.size() != n || state.compensation.size() != n || state.start.size() != n)
    throw DimensionMismatch(n, state.running_sum.size());

  CesaroState next{state.k + 1, state.start, vec_mat_mul(state.power_vec, p), state.running_sum,
                   state.compensation, state.average};
  for (std::size_t i = 0; i < n; ++i)
    compensated_add(next.running_sum[i], next.compensation[i], state.power_vec[i]);
  next.average =
      ProbabilityVector(average_of(next.running_sum, next.compensation, next.k), kAverageSumTol);
  return next;
}

double residual_bound(std::size_t k) {
  if (k == 0) throw std::invalid_argument("residual_bound requires k >= 1");
  return 2.0 / static_cast<double>(k);
}

std::size_t default_max_k(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  constexpr std::size_t kFloor = 10'000'000;
  const double guaranteed = std::ceil(2.0 / eps);
  if (guaranteed >= static_cast<double>(std::numeric_limits<std::size_t>::max()))
    return std::numeric_limits<std::size_t>::max();
  return std::max(kFloor, static_cast<std::size_t>(guaranteed));
}

namespace {

// Screen slack absorbing the rounding gap between the telescoped residual
// (u P^k - u) / k and residual_norm(v_k, P).
constexpr double kScreenSlack = 1e-14;
// Extra margin on the block-skipping bound for rounding in jumped iterates.
constexpr double kBoundSlack = 1e-12;

// In-place form of the step() recurrence.
class CesaroWalker {
public:
  CesaroWalker(const StochasticMatrix& p, double eps, std::size_t max_k)
      : p_(p), n_(p.size()), eps_(eps), screen_(eps + kScreenSlack), max_k_(max_k),
        u_(n_, 1.0 / static_cast<double>(n_)), power_(vec_mat_mul(u_, p)), next_(n_),
        sum_(u_), comp_(n_, 0.0), block_(n_, 0.0), avg_(n_), avg_p_(n_) {}

  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] const RowVector& power() const noexcept { return power_; }
  [[nodiscard]] double screen() const noexcept { return screen_; }

  // max_i |u P^k(i) - u(i)|, which equals k * ||v_k P - v_k||_inf by telescoping.
  [[nodiscard]] double spread() const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s = std::max(s, std::abs(power_[i] - u_[i]));
    return s;
  }

  // Applies the stopping rule at the current k. Throws at max_k.
  std::optional<StationarySolution> check(double spread) {
    if (spread > screen_ * static_cast<double>(k_) && k_ != max_k_) return std::nullopt;
    flush();
    const double kk = static_cast<double>(k_);
    for (std::size_t i = 0; i < n_; ++i) avg_[i] = (sum_[i] - comp_[i]) / kk;
    advance(avg_.data(), p_.dense().data().data(), avg_p_.data(), n_);
    const double residual = distance_inf(avg_p_, avg_);
    if (residual <= eps_) {
      ProbabilityVector pi(avg_, kAverageSumTol);
      SolveReport report;
      report.method = Method::cesaro;
      report.iterations = k_;
      report.residual = residual;
      report.positivity_margin = *std::min_element(pi.values().begin(), pi.values().end());
      return StationarySolution{std::move(pi), report};
    }
    if (k_ == max_k_) throw MaxIterationsExceeded(k_, residual);
    return std::nullopt;
  }

  // k -> k + 1.
  void step() noexcept {
    // Powers are summed plainly over short runs and each run total is folded
    // into the compensated sum, keeping the Kahan chain off the per-step path.
    for (std::size_t i = 0; i < n_; ++i) block_[i] += power_[i];
    if (++in_block_ == kFlushEvery) flush();
    advance(power_.data(), p_.dense().data().data(), next_.data(), n_);
    power_.swap(next_);
    ++k_;
  }

  // k -> k + m given pm = P^m and tm = I + P + ... + P^{m-1}.
  void jump(const DenseMatrix& pm, const DenseMatrix& tm, std::size_t m) {
    flush();
    const RowVector partial = row_times(power_, tm);
    for (std::size_t i = 0; i < n_; ++i) compensated_add(sum_[i], comp_[i], partial[i]);
    power_ = row_times(power_, pm);
    k_ += m;
  }

private:
  static constexpr std::size_t kFlushEvery = 64;

  static RowVector row_times(const RowVector& v, const DenseMatrix& m) {
    RowVector out(v.size());
    advance(v.data(), m.data().data(), out.data(), v.size());
    return out;
  }

  void flush() noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      compensated_add(sum_[i], comp_[i], block_[i]);
      block_[i] = 0.0;
    }
    in_block_ = 0;
  }

  const StochasticMatrix& p_;
  std::size_t n_;
  double eps_;
  double screen_;
  std::size_t max_k_;
  std::size_t k_ = 1;
  RowVector u_;
  RowVector power_;  // u P^k
  RowVector next_;
  RowVector sum_;    // u + ... + u P^{k-1}, minus the unflushed block_
  RowVector comp_;
  RowVector block_;
  RowVector avg_;
  RowVector avg_p_;
  std::size_t in_block_ = 0;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const double ail = a(i, l);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

// Scales each row of `m` to sum to `target`. Repeated squaring doubles the
// row-mass error at every level; pinning it keeps jumped iterates at unit mass.
void pin_row_sums(DenseMatrix& m, double target) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j);
    if (s > 0.0)
      for (std::size_t j = 0; j < n; ++j) m(i, j) *= target / s;
  }
}

// (P^m, I + P + ... + P^{m-1}) by binary splitting:
//   P^{a+b} = P^a P^b,  T_{a+b} = T_a + P^a T_b.
std::pair<DenseMatrix, DenseMatrix> power_and_partial_sum(const DenseMatrix& p, std::size_t m) {
  const std::size_t n = p.size();
  DenseMatrix acc_pow = DenseMatrix::identity(n);
  DenseMatrix acc_sum(n);
  std::size_t acc_len = 0;
  DenseMatrix base_pow = p;
  DenseMatrix base_sum = DenseMatrix::identity(n);
  std::size_t base_len = 1;
  for (std::size_t bits = m; bits != 0; bits >>= 1) {
    if (bits & 1U) {
      const DenseMatrix shifted = multiply(acc_pow, base_sum);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc_sum(i, j) += shifted(i, j);
      acc_len += base_len;
      pin_row_sums(acc_sum, static_cast<double>(acc_len));
      acc_pow = multiply(acc_pow, base_pow);
      pin_row_sums(acc_pow, 1.0);
    }
    if (bits > 1) {
      const DenseMatrix shifted = multiply(base_pow, base_sum);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) base_sum(i, j) += shifted(i, j);
      base_len *= 2;
      pin_row_sums(base_sum, static_cast<double>(base_len));
      base_pow = multiply(base_pow, base_pow);
      pin_row_sums(base_pow, 1.0);
    }
  }
  return {std::move(acc_pow), std::move(acc_sum)};
}

double l1_distance(const RowVector& a, const RowVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace

std::size_t skip_block_length(std::size_t n) {
  // A multiple of every period a chain on min(n, 12) states can have, so that
  // aligned iterates of periodic chains are compared in the same phase.
  std::size_t lcm = 1;
  for (std::size_t d = 2; d <= std::min<std::size_t>(n, 12); ++d) lcm = std::lcm(lcm, d);
  constexpr std::size_t kMinBlock = 4096;
  return lcm * ((kMinBlock + lcm - 1) / lcm);
}

StationarySolution cesaro_solve(const StochasticMatrix& p, CesaroOptions opts) {
  if (!(opts.eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const std::size_t max_k = opts.max_k.value_or(default_max_k(opts.eps));
  if (max_k == 0) throw std::invalid_argument("max_k must be >= 1");

  CesaroWalker walker(p, opts.eps, max_k);

  if (!opts.block_skipping) {
    for (;;) {
      if (auto done = walker.check(walker.spread())) return std::move(*done);
      walker.step();
    }
  }

  // Row-stochastic P contracts the l1 norm of row vectors, so for a block of
  // m steps stepped explicitly from K0 and a later block start K,
  //   spread(K + r) >= spread(K0 + r) - ||u P^K - u P^K0||_1,   0 <= r < m.
  // With margin = min_r (spread(K0 + r) - screen * r), no k in [K, K + m) can
  // meet the stopping screen when margin - delta > screen * K, and the block
  // is jumped in O(n^2) instead of O(m n^2).
  const std::size_t m = skip_block_length(p.size());
  std::optional<std::pair<DenseMatrix, DenseMatrix>> jump_ops;
  RowVector ref_power;
  double ref_margin = -std::numeric_limits<double>::infinity();

  for (;;) {
    const std::size_t k = walker.k();
    if (!ref_power.empty() && max_k - k >= m) {
      const double delta = l1_distance(walker.power(), ref_power);
      if (ref_margin - delta - kBoundSlack > walker.screen() * static_cast<double>(k)) {
        if (!jump_ops) jump_ops = power_and_partial_sum(p.dense(), m);
        walker.jump(jump_ops->first, jump_ops->second, m);
        continue;
      }
    }
    ref_power = walker.power();
    ref_margin = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double s = walker.spread();
      ref_margin = std::min(ref_margin, s - walker.screen() * static_cast<double>(r));
      if (auto done = walker.check(s)) return std::move(*done);
      walker.step();
    }
  }
}

}  // namespace stationary
