#pragma once

// CSV and JSON forms of tables, grids and sparse states.
//
// CSV: `# key=value` metadata lines, one header line, then numeric rows with
// 17 significant digits and '.' as decimal point regardless of locale.

#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "radosc/errors.hpp"
#include "radosc/grid.hpp"
#include "radosc/statespace.hpp"

namespace radosc {

using json = nlohmann::json;

inline void write_csv(std::ostream& os, const Table& t) {
  for (const auto& [k, v] : t.metadata) os << "# " << k << '=' << v << '\n';
  bool first = true;
  auto sep = [&] {
    if (!first) os << ',';
    first = false;
  };
  if (t.label_column) {
    sep();
    os << *t.label_column;
  }
  for (const auto& c : t.columns) {
    sep();
    os << c;
  }
  os << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    first = true;
    if (t.label_column) {
      sep();
      os << t.labels[i];
    }
    for (double v : t.rows[i]) {
      sep();
      os << format_double(v);
    }
    os << '\n';
  }
}

inline void write_csv(std::ostream& os, const GridResult& g, const std::string& value_name = "value") {
  write_csv(os, to_long_table(g, value_name));
}

inline json axis_to_json(const Axis& a) { return {{"name", a.name}, {"values", a.values}}; }
inline Axis axis_from_json(const json& j) {
  return {j.at("name").get<std::string>(), j.at("values").get<std::vector<double>>()};
}

inline json to_json(const GridResult& g) {
  g.validate();
  json j = {{"metadata", g.metadata},
            {"row_axis", axis_to_json(g.row_axis)},
            {"col_axis", axis_to_json(g.col_axis)},
            {"values", g.values}};
  if (g.aux_row_axis) j["aux_row_axis"] = axis_to_json(*g.aux_row_axis);
  return j;
}

inline GridResult grid_from_json(const json& j) {
  GridResult g;
  g.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  g.row_axis = axis_from_json(j.at("row_axis"));
  g.col_axis = axis_from_json(j.at("col_axis"));
  if (j.contains("aux_row_axis")) g.aux_row_axis = axis_from_json(j.at("aux_row_axis"));
  g.values = j.at("values").get<std::vector<std::vector<double>>>();
  g.validate();
  return g;
}

inline json to_json(const Table& t) {
  json j = {{"metadata", t.metadata}, {"columns", t.columns}, {"rows", t.rows}};
  if (t.label_column) {
    j["label_column"] = *t.label_column;
    j["labels"] = t.labels;
  }
  return j;
}

inline Table table_from_json(const json& j) {
  Table t;
  t.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  if (j.contains("label_column")) {
    t.label_column = j.at("label_column").get<std::string>();
    t.labels = j.at("labels").get<std::vector<std::string>>();
  }
  t.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  return t;
}

/// {"entries": [{"s", "ell", "re", "im"}, ...]} in (l, s) order.
inline json to_json(const StateVector& v) {
  json entries = json::array();
  for (const auto& [q, a] : v.amplitudes())
    entries.push_back({{"s", q.s}, {"ell", q.ell}, {"re", a.real()}, {"im", a.imag()}});
  return {{"entries", entries}};
}

inline StateVector state_from_json(const json& j) {
  StateVector::Map m;
  for (const auto& e : j.at("entries")) {
    const QNums q{e.at("s").get<int>(), e.at("ell").get<int>()};
    if (q.s < 0 || q.ell < 0) throw DomainError("state_from_json: negative quantum number");
    m[q] += cplx(e.at("re").get<double>(), e.at("im").get<double>());
  }
  return StateVector(std::move(m));
}

}  // namespace radosc
