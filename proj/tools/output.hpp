#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace minci::cli {

enum class OutputFormat { table, csv, json };

OutputFormat parse_format(std::string_view text);

/// Empty, number or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct Column {
  std::string name;
  /// Fixed decimals in table rendering; negative means 12 significant digits.
  int decimals = 4;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

Cell number(double x);
Cell number(const std::optional<double> &x);

/// csv: RFC 4180 quoting, numbers as %.12g, empty cells empty.
/// json: array of objects keyed by column name, numbers rounded to 12
/// significant digits, empty cells null.
/// table: space-aligned columns with a header line.
std::string render(const Table &table, OutputFormat format);

/// Inverse of the csv and json renderings (column decimals are not
/// recoverable and come back as the default). Cells that read fully as a
/// number become numbers. Throws std::invalid_argument on malformed input.
Table parse_csv(std::string_view text);
Table parse_json(std::string_view text);

} // namespace minci::cli
