#pragma once

#include "ahn/dataset.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ahn {

/// Per-column centering and scaling, value -> (value - mean) / std.
struct Scaler {
  std::vector<double> means;
  std::vector<double> stds;
  std::vector<std::string> column_names;

  std::size_t size() const noexcept { return means.size(); }
  std::size_t index_of(const std::string& column) const;
  void validate() const;
};

enum class ConstantColumns {
  Reject,    ///< std == 0 is an InputError
  UnitScale  ///< std == 0 is replaced by 1 (column is only centered)
};

/// Mean and sample standard deviation (N - 1) of each column. Needs >= 2 rows.
Scaler fit_scaler(const RowMatrix& columns, std::vector<std::string> names,
                  ConstantColumns policy = ConstantColumns::Reject);

/// Scaler over the feature columns followed by the target column.
Scaler fit_scaler(const Dataset& data, ConstantColumns policy = ConstantColumns::Reject);

/// Standardizes features and target, matching scaler columns by name.
Dataset apply_scaler(const Scaler& scaler, const Dataset& data);

/// Standardizes every column of `columns`; column count must match.
RowMatrix apply_scaler(const Scaler& scaler, const RowMatrix& columns);

/// value * std + mean for the named column.
std::vector<double> invert_scaler(const Scaler& scaler, std::span<const double> values,
                                  const std::string& column);

}  // namespace ahn
