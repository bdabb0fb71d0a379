#include "qtherm/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qtherm {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) {
    throw std::invalid_argument("a table needs at least one column");
  }
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row width does not match the header");
  }
  rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c > 0) out << ',';
    out << columns_[c];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      if (const double* num = std::get_if<double>(&row[c])) {
        out << format_number(*num);
      } else {
        out << std::get<std::string>(row[c]);
      }
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json Table::rows_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* num = std::get_if<double>(&row[c])) {
        obj[columns_[c]] = *num;
      } else {
        obj[columns_[c]] = std::get<std::string>(row[c]);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (const char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

Table::Cell parse_cell(const std::string& field) {
  if (!field.empty()) {
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end == field.c_str() + field.size()) return value;
  }
  return field;
}

}  // namespace

Table Table::parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV document");
  }
  Table table(split_line(line));
  while (std::getline(in, line)) {
    std::vector<Cell> row;
    for (const std::string& field : split_line(line)) {
      row.push_back(parse_cell(field));
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace qtherm
