#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace microrover {

// Numbers are rendered with six significant digits everywhere.
std::string format_number(double x);

using Cell = std::variant<std::monostate, double, std::string, bool>;

struct Column {
  std::string name;
  std::string unit; // "1" for dimensionless numbers, "" for text columns

  std::string header() const { return unit.empty() ? name : name + "[" + unit + "]"; }
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

// CSV: "# key: value" metadata lines, a name[unit] header row, RFC 4180
// quoting for text cells. JSON: {"meta", "columns", "rows"}.
void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, OutputFormat f);

} // namespace microrover
