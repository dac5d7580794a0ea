#include "ahn/demo.hpp"

#include <cmath>
#include <numbers>

namespace ahn {

Dataset sine_demo() {
  constexpr Eigen::Index kRows = 1501;
  RowMatrix x(kRows, 2);
  Eigen::VectorXd y(kRows);
  for (Eigen::Index i = 0; i < kRows; ++i) {
    const double t = static_cast<double>(i) * 0.01;
    x(i, 0) = std::cos(t);
    x(i, 1) = t;
    y(i) = std::sin(t);
  }
  return Dataset(std::move(x), std::move(y), {"x1", "x2"}, "y");
}

std::vector<double> sinusoid_series(std::size_t length, double period, double amplitude,
                                    double offset) {
  std::vector<double> series(length);
  for (std::size_t t = 0; t < length; ++t) {
    series[t] = offset + amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / period);
  }
  return series;
}

}  // namespace ahn
