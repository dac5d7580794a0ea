#include "ahn/split.hpp"

#include "ahn/errors.hpp"
#include "ahn/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ahn {

SplitMode parse_split_mode(std::string_view text) {
  if (text == "random") {
    return SplitMode::Random;
  }
  if (text == "chronological") {
    return SplitMode::Chronological;
  }
  throw InputError("unknown split mode '" + std::string(text) +
                   "' (expected random or chronological)");
}

SplitIndices split_indices(std::size_t n, double train_fraction, std::uint64_t seed,
                           SplitMode mode) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie in (0, 1), got " + std::to_string(train_fraction));
  }
  const auto n_train = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n)));
  if (n_train == 0 || n_train == n) {
    throw InputError("train fraction " + std::to_string(train_fraction) + " over " +
                     std::to_string(n) + " rows leaves an empty split");
  }
  std::vector<std::size_t> order;
  if (mode == SplitMode::Random) {
    Rng rng(seed);
    order = random_permutation(rng, n);
  } else {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  SplitIndices out;
  out.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

std::pair<Dataset, Dataset> split(const Dataset& data, double train_fraction, std::uint64_t seed,
                                  SplitMode mode) {
  const auto idx = split_indices(data.rows(), train_fraction, seed, mode);
  return {data.subset(idx.train), data.subset(idx.test)};
}

}  // namespace ahn
