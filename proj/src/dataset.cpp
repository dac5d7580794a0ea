#include "ahn/dataset.hpp"

#include "ahn/errors.hpp"

#include <cmath>

namespace ahn {

std::vector<std::string> default_feature_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    names.push_back("x" + std::to_string(r + 1));
  }
  return names;
}

Dataset::Dataset(RowMatrix x, Eigen::VectorXd y, std::vector<std::string> feature_names,
                 std::string target_name)
    : x_(std::move(x)),
      y_(std::move(y)),
      feature_names_(std::move(feature_names)),
      target_name_(std::move(target_name)) {
  if (x_.rows() < 1) {
    throw InputError("dataset needs at least one row");
  }
  if (x_.cols() < 1) {
    throw InputError("dataset needs at least one feature");
  }
  if (x_.rows() != y_.size()) {
    throw InputError("feature matrix has " + std::to_string(x_.rows()) + " rows but target has " +
                     std::to_string(y_.size()));
  }
  if (!x_.allFinite() || !y_.allFinite()) {
    throw InputError("dataset contains non-finite values");
  }
  if (feature_names_.empty()) {
    feature_names_ = default_feature_names(features());
  }
  if (feature_names_.size() != features()) {
    throw InputError("expected " + std::to_string(features()) + " feature names, got " +
                     std::to_string(feature_names_.size()));
  }
  if (target_name_.empty()) {
    target_name_ = "y";
  }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  RowMatrix x(static_cast<Eigen::Index>(indices.size()), x_.cols());
  Eigen::VectorXd y(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = static_cast<Eigen::Index>(indices[i]);
    if (indices[i] >= rows()) {
      throw InputError("row index " + std::to_string(indices[i]) + " out of range");
    }
    x.row(static_cast<Eigen::Index>(i)) = x_.row(src);
    y(static_cast<Eigen::Index>(i)) = y_(src);
  }
  return Dataset(std::move(x), std::move(y), feature_names_, target_name_);
}

std::vector<double> Dataset::feature_ranges() const {
  std::vector<double> ranges(features());
  for (Eigen::Index r = 0; r < x_.cols(); ++r) {
    ranges[static_cast<std::size_t>(r)] = x_.col(r).maxCoeff() - x_.col(r).minCoeff();
  }
  return ranges;
}

}  // namespace ahn
