#include "ahn/scaler.hpp"

#include "ahn/errors.hpp"

#include <cmath>

namespace ahn {

std::size_t Scaler::index_of(const std::string& column) const {
  for (std::size_t c = 0; c < column_names.size(); ++c) {
    if (column_names[c] == column) {
      return c;
    }
  }
  throw InputError("scaler has no column '" + column + "'");
}

void Scaler::validate() const {
  if (means.size() != stds.size() || means.size() != column_names.size()) {
    throw InputError("scaler means, stds and names disagree in length");
  }
  for (std::size_t c = 0; c < means.size(); ++c) {
    if (!std::isfinite(means[c]) || !std::isfinite(stds[c]) || !(stds[c] > 0.0)) {
      throw InputError("scaler column '" + column_names[c] + "' needs a finite mean and std > 0");
    }
  }
}

Scaler fit_scaler(const RowMatrix& columns, std::vector<std::string> names,
                  ConstantColumns policy) {
  if (names.size() != static_cast<std::size_t>(columns.cols())) {
    throw InputError("scaler needs one name per column");
  }
  const auto n_rows = columns.rows();
  if (n_rows < 2 && policy == ConstantColumns::Reject) {
    throw InputError("standardization needs at least 2 rows");
  }
  Scaler scaler;
  scaler.column_names = std::move(names);
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    const auto col = columns.col(c);
    const double mean = col.sum() / static_cast<double>(n_rows);
    const bool constant = n_rows < 2 || col.maxCoeff() == col.minCoeff();
    double std_dev = 1.0;
    if (constant) {
      if (policy == ConstantColumns::Reject) {
        throw InputError("column '" + scaler.column_names[static_cast<std::size_t>(c)] +
                         "' is constant and cannot be scaled; drop it before standardizing");
      }
    } else {
      const double ss = (col.array() - mean).square().sum();
      std_dev = std::sqrt(ss / static_cast<double>(n_rows - 1));
    }
    scaler.means.push_back(mean);
    scaler.stds.push_back(std_dev);
  }
  scaler.validate();
  return scaler;
}

Scaler fit_scaler(const Dataset& data, ConstantColumns policy) {
  RowMatrix all(data.x().rows(), data.x().cols() + 1);
  all.leftCols(data.x().cols()) = data.x();
  all.col(data.x().cols()) = data.y();
  auto names = data.feature_names();
  names.push_back(data.target_name());
  return fit_scaler(all, std::move(names), policy);
}

RowMatrix apply_scaler(const Scaler& scaler, const RowMatrix& columns) {
  if (static_cast<std::size_t>(columns.cols()) != scaler.size()) {
    throw InputError("scaler has " + std::to_string(scaler.size()) + " columns, input has " +
                     std::to_string(columns.cols()));
  }
  RowMatrix out(columns.rows(), columns.cols());
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    const auto k = static_cast<std::size_t>(c);
    out.col(c) = (columns.col(c).array() - scaler.means[k]) / scaler.stds[k];
  }
  return out;
}

Dataset apply_scaler(const Scaler& scaler, const Dataset& data) {
  RowMatrix x(data.x().rows(), data.x().cols());
  for (Eigen::Index r = 0; r < x.cols(); ++r) {
    const auto k = scaler.index_of(data.feature_names()[static_cast<std::size_t>(r)]);
    x.col(r) = (data.x().col(r).array() - scaler.means[k]) / scaler.stds[k];
  }
  const auto t = scaler.index_of(data.target_name());
  Eigen::VectorXd y = (data.y().array() - scaler.means[t]) / scaler.stds[t];
  return Dataset(std::move(x), std::move(y), data.feature_names(), data.target_name());
}

std::vector<double> invert_scaler(const Scaler& scaler, std::span<const double> values,
                                  const std::string& column) {
  const auto k = scaler.index_of(column);
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    out.push_back(v * scaler.stds[k] + scaler.means[k]);
  }
  return out;
}

}  // namespace ahn
