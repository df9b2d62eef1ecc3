#include "anharm/literature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "anharm/errors.hpp"
#include "literature_data.hpp"

namespace anharm {

namespace {

using nlohmann::json;

std::vector<PrintedValue> parse_row(const json& row, std::size_t width) {
  if (!row.is_array() || row.size() != width) throw ValidationError("literature row has the wrong width");
  std::vector<PrintedValue> out;
  for (const auto& cell : row) out.push_back(parse_printed(cell.get<std::string>()));
  return out;
}

}  // namespace

double PrintedValue::last_digit() const { return std::pow(10.0, -decimals); }

PrintedValue parse_printed(std::string_view text) {
  PrintedValue p;
  p.text = std::string(text);
  std::size_t used = 0;
  try {
    p.value = std::stod(p.text, &used);
  } catch (const std::exception&) {
    throw ValidationError("not a number: '" + p.text + "'");
  }
  if (used != p.text.size()) throw ValidationError("trailing characters in '" + p.text + "'");
  const auto dot = p.text.find('.');
  p.decimals = dot == std::string::npos ? 0 : static_cast<int>(p.text.size() - dot - 1);
  return p;
}

Literature parse_literature(std::string_view json_text) {
  Literature lit;
  try {
    const json doc = json::parse(json_text);
    lit.version = doc.at("version").get<int>();
    const auto& t1 = doc.at("table1");
    lit.table1_source = t1.at("source").get<std::string>();
    lit.table1_z = parse_printed(t1.at("z").get<std::string>()).value;
    for (const auto& row : t1.at("rows")) {
      const auto v = parse_row(row, 6);
      lit.table1.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
    }
    const auto& t2 = doc.at("table2");
    lit.table2_source = t2.at("source").get<std::string>();
    for (const auto& row : t2.at("rows")) {
      const auto v = parse_row(row, 8);
      lit.table2.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed literature data: ") + e.what());
  }
  return lit;
}

const Literature& literature() {
  static const Literature lit = parse_literature(detail::kLiteratureJson);
  return lit;
}

}  // namespace anharm
