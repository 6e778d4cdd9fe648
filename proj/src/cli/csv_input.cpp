#include "cli/csv_input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "lasd/error.hpp"

namespace lasd::cli {

namespace {

std::string where(const std::string& path, std::size_t line) { return path + ":" + std::to_string(line) + ": "; }

std::vector<std::string> split_line(const std::string& line, const std::string& path, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      if (!cell.empty() || was_quoted) throw InputError(where(path, line_no) + "stray quote inside a field");
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cell));
      cell.clear();
      was_quoted = false;
    } else {
      cell += c;
    }
  }
  if (quoted) throw InputError(where(path, line_no) + "unterminated quoted field");
  out.push_back(std::move(cell));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  CsvTable table;
  table.path = path;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto cells = split_line(line, path, line_no);
    for (auto& c : cells) c = trim(c);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw InputError(where(path, line_no) + "expected " + std::to_string(table.header.size()) + " fields, found " +
                       std::to_string(cells.size()));
    }
    table.rows.push_back(std::move(cells));
    table.lines.push_back(line_no);
  }
  if (!have_header) throw InputError("input file '" + path + "' is empty; a header row is required");
  return table;
}

std::size_t resolve_column(const CsvTable& table, const std::string& column) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (table.header[i] == column) return i;
  }
  if (!column.empty() && column.find_first_not_of("0123456789") == std::string::npos) {
    const auto idx = std::stoul(column);
    if (idx < table.header.size()) return idx;
  }
  throw InputError("column '" + column + "' not found in '" + table.path + "'");
}

double parse_number(const std::string& cell, const CsvTable& table, std::size_t row) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
  if (cell.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw InputError(where(table.path, table.lines[row]) + "'" + cell + "' is not a finite decimal number");
  }
  return v;
}

std::vector<double> read_column(const CsvTable& table, const std::string& column) {
  const auto col = resolve_column(table, column);
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) out.push_back(parse_number(table.rows[r][col], table, r));
  if (out.empty()) throw InputError("input file '" + table.path + "' has no data rows");
  return out;
}

std::map<std::string, std::vector<double>> read_groups(const CsvTable& table, const std::string& column,
                                                       const std::string& group_column) {
  const auto col = resolve_column(table, column);
  const auto grp = resolve_column(table, group_column);
  std::map<std::string, std::vector<double>> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out[table.rows[r][grp]].push_back(parse_number(table.rows[r][col], table, r));
  }
  return out;
}

}  // namespace lasd::cli
