#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <variant>

#include "anharm/report.hpp"
#include "json.hpp"

namespace anharm {

namespace {

using Cell = std::variant<double, long long, std::string>;

struct Column {
  std::string name;
  Cell value;
};

std::vector<Column> row_columns(const ResultRow& row) {
  std::vector<Column> cols;
  const auto num = [&](const char* name, const std::optional<double>& v) {
    if (v) cols.push_back({name, *v});
  };
  if (!row.series.empty()) cols.push_back({"series", row.series});
  cols.push_back({"mass", row.params.mass});
  cols.push_back({"omega", row.params.omega});
  cols.push_back({"lambda", row.params.lambda});
  cols.push_back({"beta", row.params.beta});
  cols.push_back({"T", row.params.temperature()});
  if (row.rescaled) {
    cols.push_back({"z", row.rescaled->z});
    cols.push_back({"t_reduced", row.rescaled->t_reduced});
  }
  cols.push_back({"order", static_cast<long long>(row.max_order)});
  num("Omega", row.omega_big);
  num("F0", row.f0);
  num("F2", row.f2);
  num("F3", row.f3);
  num("F4", row.f4);
  num("c2", row.c2);
  num("c3", row.c3);
  num("c4", row.c4);
  num("quad_c2", row.quad_c2);
  num("quad_c3", row.quad_c3);
  num("quad_c4", row.quad_c4);
  const std::array<std::pair<const char*, std::pair<std::optional<double>, std::optional<double>>>, 3> gaps{
      {{"gap_c2", {row.c2, row.quad_c2}}, {"gap_c3", {row.c3, row.quad_c3}}, {"gap_c4", {row.c4, row.quad_c4}}}};
  for (const auto& [name, pair] : gaps) {
    if (pair.first && pair.second) num(name, std::abs(*pair.first - *pair.second) / std::abs(*pair.second));
  }
  num("exact", row.exact);
  num("exact_bound", row.exact_bound);
  if (row.exact_basis) cols.push_back({"exact_basis", static_cast<long long>(*row.exact_basis)});
  for (const auto& [name, value] : row.literature) cols.push_back({name, value});
  cols.push_back({"series_status", std::string(to_string(row.series_status))});
  if (row.exact_status) cols.push_back({"exact_status", std::string(to_string(*row.exact_status))});
  if (row.quad_status) cols.push_back({"quad_status", std::string(to_string(*row.quad_status))});
  return cols;
}

// Union of column names over all rows, in first-seen order.
std::vector<std::string> header(const std::vector<std::vector<Column>>& table) {
  std::vector<std::string> names;
  for (const auto& cols : table) {
    auto pos = names.begin();
    for (const auto& c : cols) {
      auto it = std::find(names.begin(), names.end(), c.name);
      if (it == names.end()) {
        pos = names.insert(pos, c.name) + 1;
      } else {
        pos = it + 1;
      }
    }
  }
  return names;
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

std::vector<std::vector<std::string>> text_table(const std::vector<ResultRow>& rows, std::vector<std::string>& names) {
  std::vector<std::vector<Column>> table;
  for (const auto& r : rows) table.push_back(row_columns(r));
  names = header(table);
  std::vector<std::vector<std::string>> out;
  for (const auto& cols : table) {
    std::vector<std::string> line;
    for (const auto& name : names) {
      auto it = std::find_if(cols.begin(), cols.end(), [&](const Column& c) { return c.name == name; });
      line.push_back(it == cols.end() ? "NA" : cell_text(it->value));
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  std::vector<std::string> names;
  const auto lines = text_table(rows, names);
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (const auto& line : lines) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ResultRow>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& c : row_columns(r)) {
      std::visit([&](const auto& v) { obj[c.name] = v; }, c.value);
    }
    if (!r.message.empty()) obj["message"] = r.message;
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const std::vector<ResultRow>& rows) {
  std::vector<std::string> names;
  const auto lines = text_table(rows, names);
  std::vector<std::size_t> width(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    width[i] = names[i].size();
    for (const auto& line : lines) width[i] = std::max(width[i], line[i].size());
  }
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    out << '\n';
  };
  emit(names);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (names.empty() ? 0 : names.size() - 1), '-') << '\n';
  for (const auto& line : lines) emit(line);
}

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: write_csv(out, rows); break;
    case OutputFormat::Json: write_json(out, rows); break;
    case OutputFormat::Table: write_table(out, rows); break;
  }
}

}  // namespace anharm
