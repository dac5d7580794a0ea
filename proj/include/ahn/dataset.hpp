#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ahn {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Feature matrix with a single target column. Immutable once constructed.
class Dataset {
 public:
  /// Validates N >= 1, matching row counts, finite values and name counts.
  /// Empty name lists are replaced by x1..xn and "y".
  Dataset(RowMatrix x, Eigen::VectorXd y, std::vector<std::string> feature_names = {},
          std::string target_name = {});

  std::size_t rows() const noexcept { return static_cast<std::size_t>(x_.rows()); }
  std::size_t features() const noexcept { return static_cast<std::size_t>(x_.cols()); }

  const RowMatrix& x() const noexcept { return x_; }
  const Eigen::VectorXd& y() const noexcept { return y_; }
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
  const std::string& target_name() const noexcept { return target_name_; }

  std::span<const double> row(std::size_t i) const {
    return {x_.row(static_cast<Eigen::Index>(i)).data(), features()};
  }

  /// Rows at the given indices, in that order. Indices must be non-empty.
  Dataset subset(std::span<const std::size_t> indices) const;

  /// Per-feature max - min.
  std::vector<double> feature_ranges() const;

 private:
  RowMatrix x_;
  Eigen::VectorXd y_;
  std::vector<std::string> feature_names_;
  std::string target_name_;
};

std::vector<std::string> default_feature_names(std::size_t n);

}  // namespace ahn
