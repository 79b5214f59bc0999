#include "stationary/errors.hpp"

#include <cstdio>
#include <string>

namespace stationary {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

NotSquare::NotSquare(std::size_t rows_, std::size_t bad_row_, std::size_t len)
    : ValidationError("matrix is not square: " + std::to_string(rows_) + " rows but row " +
                      std::to_string(bad_row_) + " has " + std::to_string(len) + " entries"),
      rows(rows_), bad_row(bad_row_), bad_row_length(len) {}

NegativeEntry::NegativeEntry(std::size_t i_, std::size_t j_, double v)
    : ValidationError("negative entry p(" + std::to_string(i_) + "," + std::to_string(j_) +
                      ") = " + num(v)),
      i(i_), j(j_), value(v) {}

RowSumViolation::RowSumViolation(std::size_t r, double s)
    : ValidationError("row " + std::to_string(r) + " sums to " + num(s) + ", expected 1"),
      row(r), sum(s) {}

DimensionMismatch::DimensionMismatch(std::size_t e, std::size_t a)
    : Error("dimension mismatch: expected " + std::to_string(e) + ", got " + std::to_string(a)),
      expected(e), actual(a) {}

IndexOutOfRange::IndexOutOfRange(std::size_t idx, std::size_t n_)
    : Error("state index " + std::to_string(idx) + " out of range for n = " + std::to_string(n_)),
      index(idx), n(n_) {}

NotUniqueStationary::NotUniqueStationary(std::size_t dim)
    : SolverError("stationary distribution is not unique: kernel of (P - I)^T has dimension " +
                  std::to_string(dim)),
      kernel_dimension(dim) {}

NonPositiveEntry::NonPositiveEntry(std::size_t idx, double v)
    : SolverError("stationary entry pi(" + std::to_string(idx) + ") = " + num(v) +
                  " is not strictly positive"),
      index(idx), value(v) {}

MaxIterationsExceeded::MaxIterationsExceeded(std::size_t k, double r)
    : SolverError("iteration limit reached at k = " + std::to_string(k) + " with residual " +
                  num(r)),
      iterations(k), residual(r) {}

}  // namespace stationary
