#include "stationary/cli/matrix_io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stationary::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line) {
  const std::string token(trim(field));
  if (token.empty())
    throw ParseError("empty field on line " + std::to_string(line));
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || errno == ERANGE)
    throw ParseError("invalid number '" + token + "' on line " + std::to_string(line));
  return value;
}

RawRows parse_csv(std::string_view text) {
  RawRows rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;

    std::vector<double> row;
    while (true) {
      const auto comma = line.find(',');
      row.push_back(parse_number(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix file contains no rows");
  return rows;
}

RawRows parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw ParseError("JSON matrix must be an object with a \"rows\" array");

  RawRows rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw ParseError("every entry of \"rows\" must be an array");
    std::vector<double> values;
    for (const auto& x : row) {
      if (!x.is_number()) throw ParseError("matrix entries must be numbers");
      values.push_back(x.get<double>());
    }
    rows.push_back(std::move(values));
  }
  if (doc.contains("n")) {
    const auto& n = doc["n"];
    if (!n.is_number_integer() || n.get<long long>() < 0 ||
        static_cast<std::size_t>(n.get<long long>()) != rows.size())
      throw ParseError("\"n\" must be an integer equal to the number of rows");
  } else {
    throw ParseError("JSON matrix must carry an integer \"n\"");
  }
  if (rows.empty()) throw ParseError("matrix file contains no rows");
  return rows;
}

}  // namespace

RawRows parse_matrix_text(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json(body);
  return parse_csv(text);
}

RawRows read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return parse_matrix_text(buf.str());
}

std::string to_json_text(const StochasticMatrix& p) {
  nlohmann::json doc;
  doc["n"] = p.size();
  doc["rows"] = p.rows();
  return doc.dump() + "\n";
}

std::string to_csv_text(const StochasticMatrix& p) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", p(i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const StochasticMatrix& p) {
  const bool json = path.extension() == ".json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << (json ? to_json_text(p) : to_csv_text(p));
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace stationary::cli
