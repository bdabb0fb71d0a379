#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qtherm {

/// Fixed-point-free decimal rendering used everywhere a number reaches an
/// output file: 12 significant digits, '.' separator.
std::string format_number(double value);

/// Column-named table of numeric/text cells; the common shape of every CLI
/// result. CSV round-trips byte-identically through parse_csv + to_csv.
class Table {
 public:
  using Cell = std::variant<double, std::string>;

  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string to_csv() const;

  /// Rows as an array of objects keyed by column name.
  nlohmann::json rows_json() const;

  static Table parse_csv(const std::string& text);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace qtherm
