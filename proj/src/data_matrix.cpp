#include "glknot/data_matrix.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace glknot {

DataMatrix make_data_matrix(Eigen::MatrixXd values,
                            std::vector<std::string> column_names) {
  const auto n = values.rows();
  const auto p = values.cols();
  if (n < 3)
    throw dimension_error("need at least 3 observations, got " + std::to_string(n));
  if (p < 2)
    throw dimension_error("need at least 2 variables, got " + std::to_string(p));
  if (!values.allFinite())
    throw dimension_error("data matrix contains non-finite entries");
  if (!column_names.empty() && static_cast<Eigen::Index>(column_names.size()) != p)
    throw dimension_error("column name count does not match column count");
  return DataMatrix{std::move(values), std::move(column_names)};
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  const char* s = cell.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s, &end);
  // allow surrounding whitespace only
  while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  const char* start = s;
  while (*start != '\0' && std::isspace(static_cast<unsigned char>(*start))) ++start;
  if (end == s || *end != '\0' || start == s + cell.size() || errno == ERANGE)
    throw parse_error("non-numeric cell at row " + std::to_string(row) +
                      ", column " + std::to_string(col) + ": '" + cell + "'");
  return v;
}

}  // namespace

DataMatrix load_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);

  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (first && has_header) {
      names = cells;
      first = false;
      ++lineno;
      continue;
    }
    first = false;
    std::vector<double> row;
    row.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      row.push_back(parse_cell(cells[c], lineno, c));
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error("ragged row at line " + std::to_string(lineno) + ": expected " +
                        std::to_string(rows.front().size()) + " cells, got " +
                        std::to_string(row.size()));
    rows.push_back(std::move(row));
    ++lineno;
  }
  if (rows.empty()) throw parse_error("empty file: " + path);
  if (!names.empty() && names.size() != rows.front().size())
    throw parse_error("header width does not match data width in " + path);

  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return make_data_matrix(std::move(m), std::move(names));
}

DataMatrix standardize(const DataMatrix& d) {
  const auto n = d.n();
  Eigen::MatrixXd out = d.values;
  for (Eigen::Index j = 0; j < d.p(); ++j) {
    const double mean = out.col(j).mean();
    out.col(j).array() -= mean;
    const double sd = std::sqrt(out.col(j).squaredNorm() / static_cast<double>(n));
    if (sd == 0.0) {
      std::string name = d.column_names.empty()
                             ? std::to_string(j)
                             : d.column_names[static_cast<std::size_t>(j)];
      throw degenerate_column_error("column " + name + " has zero variance");
    }
    out.col(j) /= sd;
  }
  return DataMatrix{std::move(out), d.column_names};
}

DataMatrix augment_noise(const DataMatrix& d, Eigen::Index q, std::uint64_t rng_seed) {
  if (q < 0) throw dimension_error("noise column count must be >= 0");
  if (q == 0) return d;
  Eigen::MatrixXd out(d.n(), d.p() + q);
  out.leftCols(d.p()) = d.values;
  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Eigen::Index j = 0; j < q; ++j)
    for (Eigen::Index i = 0; i < d.n(); ++i) out(i, d.p() + j) = gauss(rng);
  std::vector<std::string> names = d.column_names;
  if (!names.empty())
    for (Eigen::Index j = 0; j < q; ++j) names.push_back("noise" + std::to_string(j));
  return DataMatrix{std::move(out), std::move(names)};
}

DataMatrix subsample_rows(const DataMatrix& d, Eigen::Index m, std::uint64_t rng_seed) {
  if (m < 3 || m > d.n())
    throw dimension_error("subsample size " + std::to_string(m) +
                          " out of range [3, " + std::to_string(d.n()) + "]");
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(d.n()));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::mt19937_64 rng(rng_seed);
  // partial Fisher-Yates: first m entries are the sample
  for (Eigen::Index i = 0; i < m; ++i) {
    std::uniform_int_distribution<Eigen::Index> pick(i, d.n() - 1);
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
  }
  Eigen::MatrixXd out(m, d.p());
  for (Eigen::Index i = 0; i < m; ++i)
    out.row(i) = d.values.row(idx[static_cast<std::size_t>(i)]);
  return DataMatrix{std::move(out), d.column_names};
}

}  // namespace glknot
