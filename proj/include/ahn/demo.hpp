#pragma once

#include "ahn/dataset.hpp"

#include <cstddef>
#include <vector>

namespace ahn {

/// x1 = cos t, x2 = t, y = sin t for t = 0, 0.01, .., 15 (1501 rows).
Dataset sine_demo();

/// offset + amplitude * sin(2 pi t / period) for t = 0..length-1.
std::vector<double> sinusoid_series(std::size_t length, double period = 25.0,
                                    double amplitude = 1.0, double offset = 3.0);

}  // namespace ahn
