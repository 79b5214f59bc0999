#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stationary/errors.hpp"
#include "stationary/stochastic_matrix.hpp"

namespace stationary::cli {

class IoError : public Error {
public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "IoError"; }
};

class ParseError : public Error {
public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "ParseError"; }
};

using RawRows = std::vector<std::vector<double>>;

/// Parses a matrix file body. JSON ({"n": .., "rows": [[..], ..]}) is
/// recognised by a leading '{'; anything else is read as headerless CSV.
/// Shape is not checked here; StochasticMatrix::validate does that.
RawRows parse_matrix_text(std::string_view text);

RawRows read_matrix_file(const std::filesystem::path& path);

/// Canonical JSON form.
std::string to_json_text(const StochasticMatrix& p);
/// n lines of n comma-separated values, 17 significant digits.
std::string to_csv_text(const StochasticMatrix& p);

/// Writes JSON for a ".json" extension, CSV otherwise.
void write_matrix_file(const std::filesystem::path& path, const StochasticMatrix& p);

}  // namespace stationary::cli
