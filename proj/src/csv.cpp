#include "ahn/csv.hpp"

#include "ahn/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ahn {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : trim(current));
      current.clear();
      was_quoted = false;
    } else {
      current += c;
    }
  }
  if (quoted) {
    throw InputError("unterminated quoted field");
  }
  fields.push_back(was_quoted ? current : trim(current));
  return fields;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    out += out.empty() ? item : ", " + item;
  }
  return out;
}

}  // namespace

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == name) {
      return c;
    }
  }
  throw InputError("column '" + name + "' not found; available columns: " + join(header));
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
      line.erase(0, 3);
    }
    if (trim(line).empty()) {
      continue;
    }
    try {
      auto fields = split_record(line);
      if (!have_header) {
        table.header = std::move(fields);
        have_header = true;
      } else {
        table.rows.push_back(std::move(fields));
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) {
    throw InputError("CSV input has no header row");
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_csv(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

RowMatrix numeric_columns(const CsvTable& table, std::span<const std::string> names) {
  std::vector<std::size_t> cols;
  cols.reserve(names.size());
  for (const auto& name : names) {
    cols.push_back(table.column_index(name));
  }
  RowMatrix out(static_cast<Eigen::Index>(table.rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string where =
          "row " + std::to_string(i + 1) + ", column '" + names[c] + "'";
      if (cols[c] >= row.size() || row[cols[c]].empty()) {
        throw InputError("missing value at " + where);
      }
      const std::string& cell = row[cols[c]];
      double value = 0.0;
      const char* begin = cell.data();
      const char* end = cell.data() + cell.size();
      if (*begin == '+') {
        ++begin;
      }
      const auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw InputError("non-numeric value '" + cell + "' at " + where);
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = value;
    }
  }
  return out;
}

Dataset load_csv(const std::filesystem::path& path, std::span<const std::string> feature_columns,
                 const std::string& target_column) {
  if (feature_columns.empty()) {
    throw InputError("no feature columns selected");
  }
  const CsvTable table = read_csv(path);
  std::vector<std::string> names(feature_columns.begin(), feature_columns.end());
  names.push_back(target_column);
  const RowMatrix values = numeric_columns(table, names);
  if (values.rows() == 0) {
    throw InputError(path.string() + ": no data rows");
  }
  const auto n = static_cast<Eigen::Index>(feature_columns.size());
  RowMatrix x = values.leftCols(n);
  Eigen::VectorXd y = values.col(n);
  return Dataset(std::move(x), std::move(y),
                 std::vector<std::string>(feature_columns.begin(), feature_columns.end()),
                 target_column);
}

std::vector<double> load_series(const std::filesystem::path& path, const std::string& column) {
  const CsvTable table = read_csv(path);
  const std::string names[] = {column};
  const RowMatrix values = numeric_columns(table, names);
  return {values.data(), values.data() + values.size()};
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

}  // namespace ahn
