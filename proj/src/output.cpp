#include "microrover/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace microrover {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
      if (!std::isfinite(x)) return nullptr;
      return std::stod(format_number(x));
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  } visit;
  return std::visit(visit, c);
}

} // namespace

void write_csv(std::ostream& out, const Table& t) {
  for (const auto& [k, v] : t.meta) out << "# " << k << ": " << v << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(t.columns[i].header());
  }
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) doc["meta"][k] = v;
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : t.columns) {
    doc["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
  }
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) r[t.columns[i].header()] = json_cell(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << "\n";
}

void write_table(std::ostream& out, const Table& t, OutputFormat f) {
  if (f == OutputFormat::json) {
    write_json(out, t);
  } else {
    write_csv(out, t);
  }
}

} // namespace microrover
