#pragma once

#include "ahn/dataset.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ahn {

enum class TargetMode { Delta };

struct WindowSpec {
  std::size_t window = 3;
  TargetMode target_mode = TargetMode::Delta;

  void validate() const;
};

/// "lag_{w-1}", .., "lag_0" (oldest to newest).
std::vector<std::string> window_feature_names(std::size_t window);

/// Sliding windows over a series: row t holds (y_{t-w+1}, .., y_t) and the
/// target y_{t+1} - y_t. Produces T - w rows; needs T >= w + 1.
Dataset make_windows(std::span<const double> series, const WindowSpec& spec);

}  // namespace ahn
