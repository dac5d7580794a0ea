#pragma once

#include "ahn/dataset.hpp"
#include "ahn/training.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ahn {

struct GridCell {
  std::size_t n_molecules = 0;
  double learning_rate = 0.0;
  double mean_mse = 0.0;
  std::vector<double> fold_mse;
};

struct GridSearchResult {
  TrainConfig best;
  /// One row per (m, eta) pair, m-major in the order given.
  std::vector<GridCell> table;
};

/// Seeded shuffle of 0..n-1 cut into `folds` contiguous groups whose sizes
/// differ by at most one.
std::vector<std::vector<std::size_t>> kfold_indices(std::size_t n, std::size_t folds,
                                                    std::uint64_t seed);

/// k-fold cross-validated MSE for every (m, eta) pair. Training uses `base`
/// with m and eta replaced; base.seed also drives the fold shuffle. The best
/// pair has the lowest mean MSE, ties going to smaller m, then smaller eta.
GridSearchResult grid_search(const Dataset& data, std::span<const std::size_t> m_values,
                             std::span<const double> eta_values, std::size_t folds,
                             const TrainConfig& base);

}  // namespace ahn
