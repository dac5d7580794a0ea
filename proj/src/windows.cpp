#include "ahn/windows.hpp"

#include "ahn/errors.hpp"

namespace ahn {

void WindowSpec::validate() const {
  if (window < 1) {
    throw InputError("window size must be >= 1");
  }
}

std::vector<std::string> window_feature_names(std::size_t window) {
  std::vector<std::string> names;
  names.reserve(window);
  for (std::size_t lag = window; lag-- > 0;) {
    names.push_back("lag_" + std::to_string(lag));
  }
  return names;
}

Dataset make_windows(std::span<const double> series, const WindowSpec& spec) {
  spec.validate();
  const std::size_t w = spec.window;
  if (series.size() < w + 1) {
    throw InputError("series of length " + std::to_string(series.size()) +
                     " is too short for window " + std::to_string(w) + " (needs at least " +
                     std::to_string(w + 1) + ")");
  }
  const std::size_t n_rows = series.size() - w;
  RowMatrix x(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(w));
  Eigen::VectorXd y(static_cast<Eigen::Index>(n_rows));
  for (std::size_t i = 0; i < n_rows; ++i) {
    // Row i ends at t = i + w - 1 and predicts the change to t + 1.
    for (std::size_t c = 0; c < w; ++c) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = series[i + c];
    }
    y(static_cast<Eigen::Index>(i)) = series[i + w] - series[i + w - 1];
  }
  return Dataset(std::move(x), std::move(y), window_feature_names(w), "delta");
}

}  // namespace ahn
