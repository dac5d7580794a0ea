#pragma once

#include "ahn/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace ahn {

enum class SplitMode { Random, Chronological };

SplitMode parse_split_mode(std::string_view text);

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// floor(fraction * n) training rows. Random mode draws them with a seeded
/// permutation; chronological mode takes the first rows. Both lists come back
/// sorted ascending. Throws InputError if either side would be empty.
SplitIndices split_indices(std::size_t n, double train_fraction, std::uint64_t seed,
                           SplitMode mode);

std::pair<Dataset, Dataset> split(const Dataset& data, double train_fraction, std::uint64_t seed,
                                  SplitMode mode);

}  // namespace ahn
