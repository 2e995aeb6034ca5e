#pragma once

// Rectangular result grids and flat tables shared by observables, dynamics and
// the command-line front end.

#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radosc/errors.hpp"

namespace radosc {

/// Locale-independent text form with 17 significant digits.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct Axis {
  std::string name;
  std::vector<double> values;
};

/// values[i][j] belongs to (row_axis[i], col_axis[j]). An optional aux_row_axis
/// labels the same rows in a second unit (t next to tau, for example).
struct GridResult {
  Axis row_axis;
  std::optional<Axis> aux_row_axis;
  Axis col_axis;
  std::vector<std::vector<double>> values;
  std::map<std::string, std::string> metadata;

  std::size_t rows() const { return row_axis.values.size(); }
  std::size_t cols() const { return col_axis.values.size(); }

  void validate() const {
    if (values.size() != rows()) throw DomainError("GridResult: row count does not match row axis");
    for (const auto& r : values)
      if (r.size() != cols()) throw DomainError("GridResult: column count does not match column axis");
    if (aux_row_axis && aux_row_axis->values.size() != rows())
      throw DomainError("GridResult: auxiliary axis length does not match row axis");
  }
};

/// Flat numeric table with an optional leading text column.
struct Table {
  std::optional<std::string> label_column;
  std::vector<std::string> columns;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> metadata;

  void add_row(std::vector<double> row, std::string label = {}) {
    if (row.size() != columns.size()) throw DomainError("Table: row width does not match header");
    if (label_column) labels.push_back(std::move(label));
    rows.push_back(std::move(row));
  }
};

/// Long form: one row per grid cell, columns (row, [aux], col, value_name).
inline Table to_long_table(const GridResult& g, const std::string& value_name = "value") {
  g.validate();
  Table t;
  t.metadata = g.metadata;
  t.columns.push_back(g.row_axis.name);
  if (g.aux_row_axis) t.columns.push_back(g.aux_row_axis->name);
  t.columns.push_back(g.col_axis.name);
  t.columns.push_back(value_name);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::vector<double> row{g.row_axis.values[i]};
      if (g.aux_row_axis) row.push_back(g.aux_row_axis->values[i]);
      row.push_back(g.col_axis.values[j]);
      row.push_back(g.values[i][j]);
      t.add_row(std::move(row));
    }
  return t;
}

}  // namespace radosc
