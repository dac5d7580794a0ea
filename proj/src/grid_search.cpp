#include "ahn/grid_search.hpp"

#include "ahn/errors.hpp"
#include "ahn/rng.hpp"

#include <algorithm>
#include <string>

namespace ahn {

std::vector<std::vector<std::size_t>> kfold_indices(std::size_t n, std::size_t folds,
                                                    std::uint64_t seed) {
  if (folds < 2) {
    throw InputError("cross-validation needs at least 2 folds, got " + std::to_string(folds));
  }
  if (folds > n) {
    throw InputError(std::to_string(folds) + " folds over " + std::to_string(n) +
                     " rows would leave a fold with no rows");
  }
  Rng rng(seed);
  const auto perm = random_permutation(rng, n);
  std::vector<std::vector<std::size_t>> out(folds);
  const std::size_t base = n / folds;
  const std::size_t extra = n % folds;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    out[f].assign(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                  perm.begin() + static_cast<std::ptrdiff_t>(pos + size));
    std::sort(out[f].begin(), out[f].end());
    pos += size;
  }
  return out;
}

GridSearchResult grid_search(const Dataset& data, std::span<const std::size_t> m_values,
                             std::span<const double> eta_values, std::size_t folds,
                             const TrainConfig& base) {
  if (m_values.empty() || eta_values.empty()) {
    throw InputError("grid search needs at least one molecule count and one learning rate");
  }
  const auto fold_rows = kfold_indices(data.rows(), folds, base.seed);

  std::vector<Dataset> train_sets;
  std::vector<Dataset> held_out;
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> train_rows;
    for (std::size_t g = 0; g < folds; ++g) {
      if (g != f) {
        train_rows.insert(train_rows.end(), fold_rows[g].begin(), fold_rows[g].end());
      }
    }
    std::sort(train_rows.begin(), train_rows.end());
    train_sets.push_back(data.subset(train_rows));
    held_out.push_back(data.subset(fold_rows[f]));
  }

  GridSearchResult result;
  for (std::size_t m : m_values) {
    for (double eta : eta_values) {
      TrainConfig cfg = base;
      cfg.n_molecules = m;
      cfg.learning_rate = eta;
      cfg.validate();
      GridCell cell{m, eta, 0.0, {}};
      for (std::size_t f = 0; f < folds; ++f) {
        const auto trained = train_compound(train_sets[f], cfg);
        cell.fold_mse.push_back(overall_error(trained.model, held_out[f]));
      }
      double total = 0.0;
      for (double v : cell.fold_mse) {
        total += v;
      }
      cell.mean_mse = total / static_cast<double>(folds);
      result.table.push_back(std::move(cell));
    }
  }

  const auto better = [](const GridCell& a, const GridCell& b) {
    if (a.mean_mse != b.mean_mse) {
      return a.mean_mse < b.mean_mse;
    }
    if (a.n_molecules != b.n_molecules) {
      return a.n_molecules < b.n_molecules;
    }
    return a.learning_rate < b.learning_rate;
  };
  const auto best = std::min_element(result.table.begin(), result.table.end(), better);
  result.best = base;
  result.best.n_molecules = best->n_molecules;
  result.best.learning_rate = best->learning_rate;
  return result;
}

}  // namespace ahn
