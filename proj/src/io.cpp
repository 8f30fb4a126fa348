#include "qent/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qent/errors.hpp"

namespace qent::io {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

double require_finite(double v, const char* where) {
  if (!std::isfinite(v)) throw ParseError(std::string(where) + ": non-finite entry");
  return v;
}

}  // namespace

ComplexMatrix<double> parse_matrix_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("DM-JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrix"))
    throw ParseError("DM-JSON: expected an object with \"dim\" and \"matrix\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw ParseError("DM-JSON: \"dim\" must be a positive integer");
  const long n = j["dim"].get<long>();
  const auto& rows = j["matrix"];
  if (!rows.is_array() || static_cast<long>(rows.size()) != n)
    throw ParseError("DM-JSON: \"matrix\" must have exactly dim rows");

  ComplexMatrix<double> m(n, n);
  for (long i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      throw ParseError("DM-JSON: each row must have exactly dim entries");
    for (long k = 0; k < n; ++k) {
      const auto& cell = row[static_cast<std::size_t>(k)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw ParseError("DM-JSON: each entry must be a [re, im] number pair");
      m(i, k) = {require_finite(cell[0].get<double>(), "DM-JSON"),
                 require_finite(cell[1].get<double>(), "DM-JSON")};
    }
  }
  return m;
}

std::string to_dm_json(const ComplexMatrix<double>& m) {
  std::ostringstream os;
  os << "{\"dim\": " << m.rows() << ", \"matrix\": [\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << '[' << format_full(m(i, j).real()) << ", " << format_full(m(i, j).imag()) << ']';
      if (j + 1 < m.cols()) os << ", ";
    }
    os << ']' << (i + 1 < m.rows() ? "," : "") << '\n';
  }
  os << "]}\n";
  return os.str();
}

ComplexMatrix<double> parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::string tok =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const char* begin = tok.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
      if (end == begin || (end && *end))
        throw ParseError("DM-CSV: bad number \"" + tok + "\"");
      vals.push_back(require_finite(v, "DM-CSV"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw ParseError("DM-CSV: empty input");
  const std::size_t n = rows.size();
  ComplexMatrix<double> m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != 2 * n)
      throw ParseError("DM-CSV: expected " + std::to_string(2 * n) +
                       " values per line over " + std::to_string(n) + " lines");
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {rows[i][2 * j],
                                                                       rows[i][2 * j + 1]};
  }
  return m;
}

std::string to_dm_csv(const ComplexMatrix<double>& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ',';
      os << format_full(m(i, j).real()) << ',' << format_full(m(i, j).imag());
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << content;
  if (!f) throw Error("write failed for " + path);
}

ComplexMatrix<double> read_matrix_file(const std::string& path) {
  const std::string text = read_file(path);
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".json") return parse_matrix_json(text);
  if (ext == ".csv") return parse_matrix_csv(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_matrix_json(text);
  return parse_matrix_csv(text);
}

}  // namespace qent::io
