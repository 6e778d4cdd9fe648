#pragma once

#include <map>
#include <string>
#include <vector>

namespace lasd::cli {

/// A parsed CSV file: header names plus raw string cells, with the 1-based
/// file line of every data row kept for error messages.
struct CsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
};

/// Header row required; comma separated; double quotes may wrap a field.
/// Throws InputError naming the file and line.
CsvTable read_csv(const std::string& path);

/// A column given by header name, or by 0-based index when `column` is all
/// digits and no header cell matches it.
std::size_t resolve_column(const CsvTable& table, const std::string& column);

/// Strict decimal parse (no locale, no hex, no trailing junk).
double parse_number(const std::string& cell, const CsvTable& table, std::size_t row);

std::vector<double> read_column(const CsvTable& table, const std::string& column);

/// Values of `column` grouped by the string in `group_column`.
std::map<std::string, std::vector<double>> read_groups(const CsvTable& table, const std::string& column,
                                                       const std::string& group_column);

}  // namespace lasd::cli
