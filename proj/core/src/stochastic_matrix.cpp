#include "stationary/stochastic_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <stdexcept>

#include "stationary/errors.hpp"

namespace stationary {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw NotSquare(n_, r, row.size());
    data_.insert(data_.end(), row.begin(), row.end());
    ++r;
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (double x : row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

RowVector DenseMatrix::apply(std::span<const double> x) const {
  if (x.size() != n_) throw DimensionMismatch(n_, x.size());
  RowVector y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

StochasticMatrix StochasticMatrix::validate(const std::vector<std::vector<double>>& raw,
                                            ValidateOptions opts) {
  if (!(opts.row_sum_tol > 0.0))
    throw std::invalid_argument("row_sum_tol must be positive");
  const std::size_t n = raw.size();
  if (n == 0) throw NotSquare(0, 0, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n) throw NotSquare(n, i, raw[i].size());

  // Sign violations are reported before row sums, row by row.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (raw[i][j] < 0.0) throw NegativeEntry(i, j, raw[i][j]);

  DenseMatrix m(n);
  std::vector<double> sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = raw[i][j];
      s += raw[i][j];
    }
    if (!(std::abs(s - 1.0) <= opts.row_sum_tol)) throw RowSumViolation(i, s);
    sums[i] = s;
  }
  if (opts.renormalize) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) /= sums[i];
  }
  return StochasticMatrix(std::move(m));
}

StochasticMatrix StochasticMatrix::validate(
    std::initializer_list<std::initializer_list<double>> raw, ValidateOptions opts) {
  std::vector<std::vector<double>> rows;
  rows.reserve(raw.size());
  for (const auto& r : raw) rows.emplace_back(r);
  return validate(rows, opts);
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  if (n == 0) throw NotSquare(0, 0, 0);
  return StochasticMatrix(DenseMatrix::identity(n));
}

std::vector<std::vector<double>> StochasticMatrix::rows() const {
  std::vector<std::vector<double>> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

DenseMatrix StochasticMatrix::minus_identity() const {
  DenseMatrix m = dense_;
  for (std::size_t i = 0; i < size(); ++i) m(i, i) -= 1.0;
  return m;
}

ProbabilityVector::ProbabilityVector(RowVector entries, double sum_tol)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidDistribution("probability vector must be non-empty");
  double s = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i] >= 0.0))
      throw InvalidDistribution("probability vector entry " + std::to_string(i) +
                                " is negative or not a number");
    s += entries_[i];
  }
  if (!(std::abs(s - 1.0) <= sum_tol))
    {
    char buf[64];
    std::snprintf(buf, sizeof buf, "probability vector sums to %.17g", s);
    throw InvalidDistribution(buf);
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  return ProbabilityVector(RowVector(n, 1.0 / static_cast<double>(n)));
}

void vec_mat_mul_into(std::span<const double> v, const StochasticMatrix& p,
                      std::span<double> out) {
  const std::size_t n = p.size();
  if (v.size() != n) throw DimensionMismatch(n, v.size());
  if (out.size() != n) throw DimensionMismatch(n, out.size());
  std::fill(out.begin(), out.end(), 0.0);
  const double* pd = p.dense().data().data();
  for (std::size_t i = 0; i < n; ++i) {
    const double vi = v[i];
    const double* row = pd + i * n;
    for (std::size_t j = 0; j < n; ++j) out[j] += vi * row[j];
  }
}

RowVector vec_mat_mul(std::span<const double> v, const StochasticMatrix& p) {
  RowVector out(p.size());
  vec_mat_mul_into(v, p, out);
  return out;
}

StochasticMatrix mat_mul(const StochasticMatrix& a, const StochasticMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch(n, b.size());
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
    }
  return StochasticMatrix(std::move(c));
}

StochasticMatrix mat_pow(const StochasticMatrix& p, std::size_t k) {
  if (k == 0) return StochasticMatrix::identity(p.size());
  StochasticMatrix acc = p;
  for (std::size_t step = 1; step < k; ++step) acc = mat_mul(acc, p);
  return acc;
}

double residual_norm(std::span<const double> v, const StochasticMatrix& p) {
  const RowVector vp = vec_mat_mul(v, p);
  return distance_inf(vp, v);
}

double distance_inf(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

}  // namespace stationary
