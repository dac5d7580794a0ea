#pragma once

#include "ahn/compound.hpp"

#include <string>

namespace ahn {

/// Fixed-point text with `decimals` digits, rounding half away from zero on
/// the shortest decimal form of `value` (0.0375 -> "0.038").
std::string format_fixed(double value, int decimals);

/// Human-readable report: molecule count, learning factor, overall error,
/// centers table and one coefficient table per molecule.
std::string summary_text(const CompoundModel& model);

}  // namespace ahn
