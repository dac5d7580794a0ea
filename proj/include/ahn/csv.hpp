#pragma once

#include "ahn/dataset.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ahn {

/// Raw comma-separated table: header row plus unparsed cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Throws InputError listing the available columns if `name` is absent.
  std::size_t column_index(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

/// Parses the named columns as doubles. Zero data rows is allowed. A
/// non-numeric or missing cell raises InputError citing its data row
/// (1-based) and column name.
RowMatrix numeric_columns(const CsvTable& table, std::span<const std::string> names);

/// Dataset from the named feature and target columns of a CSV file.
Dataset load_csv(const std::filesystem::path& path, std::span<const std::string> feature_columns,
                 const std::string& target_column);

/// One numeric column as a series.
std::vector<double> load_series(const std::filesystem::path& path, const std::string& column);

/// Splits "a,b,c" into its trimmed items.
std::vector<std::string> split_list(const std::string& list);

}  // namespace ahn
