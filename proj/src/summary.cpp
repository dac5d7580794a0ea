#include "ahn/summary.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ahn {

namespace {

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) {
    return std::to_string(value);
  }
  return {buf.data(), ptr};
}

// Plain text table: left-aligned row labels, right-aligned columns.
std::string render_table(const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& column_names,
                         const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_width = 0;
  for (const auto& label : row_labels) {
    label_width = std::max(label_width, label.size());
  }
  std::vector<std::size_t> widths(column_names.size());
  for (std::size_t c = 0; c < column_names.size(); ++c) {
    widths[c] = column_names[c].size();
    for (const auto& row : cells) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  const auto pad_left = [&out](const std::string& s, std::size_t width) {
    out << std::string(width - std::min(width, s.size()), ' ') << s;
  };
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < column_names.size(); ++c) {
    out << ' ';
    pad_left(column_names[c], widths[c]);
  }
  out << '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    out << row_labels[i] << std::string(label_width - row_labels[i].size(), ' ');
    for (std::size_t c = 0; c < column_names.size(); ++c) {
      out << ' ';
      pad_left(cells[i][c], widths[c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  std::array<char, 512> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  if (ec != std::errc()) {
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    return buf.data();
  }
  std::string text(buf.data(), ptr);
  const bool negative = !text.empty() && text.front() == '-';
  if (negative) {
    text.erase(0, 1);
  }
  const auto dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? std::string() : text.substr(dot + 1);
  frac.resize(static_cast<std::size_t>(decimals) + 1, '0');
  const bool round_up = frac.back() >= '5';
  frac.pop_back();

  // Digits of whole+frac as one number; add one unit in the last place.
  std::string digits = whole + frac;
  if (round_up) {
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
      if (i == 0) {
        digits.insert(digits.begin(), '1');
      }
    }
  }
  const std::size_t whole_len = digits.size() - static_cast<std::size_t>(decimals);
  std::string result = digits.substr(0, whole_len);
  if (decimals > 0) {
    result += '.' + digits.substr(whole_len);
  }
  const bool is_zero = std::all_of(digits.begin(), digits.end(), [](char c) { return c == '0'; });
  return (negative && !is_zero) ? "-" + result : result;
}

std::string summary_text(const CompoundModel& model) {
  std::ostringstream out;
  out << "Artificial Hydrocarbon Network trained:\n\n";
  out << "Number of molecules:\n " << model.size() << " \n\n";
  out << "Learning factor:\n " << shortest(model.learning_rate) << " \n\n";
  out << "Overall error:\n " << format_fixed(model.overall_error, 3) << " \n\n";

  out << "Centers of the molecules:\n";
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t j = 0; j < model.size(); ++j) {
    labels.push_back("molecule" + std::to_string(j + 1));
    std::vector<std::string> row;
    for (Eigen::Index r = 0; r < model.molecules[j].center.size(); ++r) {
      row.push_back(format_fixed(model.molecules[j].center(r), 7));
    }
    cells.push_back(std::move(row));
  }
  out << render_table(labels, model.feature_names, cells) << '\n';

  out << "Molecules:\n";
  for (std::size_t j = 0; j < model.size(); ++j) {
    const auto& mol = model.molecules[j];
    const std::string id = std::to_string(j + 1);
    std::vector<std::string> rows{"C" + id};
    std::vector<std::vector<std::string>> values;
    values.emplace_back(model.n_features(), format_fixed(mol.carbon_value, 3));
    for (int i = 0; i < mol.hydrogen_count; ++i) {
      rows.push_back("H" + id + std::to_string(i + 1));
      std::vector<std::string> row;
      for (Eigen::Index r = 0; r < mol.hydrogen_coeffs.cols(); ++r) {
        row.push_back(format_fixed(mol.hydrogen_coeffs(i, r), 3));
      }
      values.push_back(std::move(row));
    }
    out << "Molecule " << id << ":\n" << render_table(rows, model.feature_names, values);
    if (j + 1 < model.size()) {
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace ahn
