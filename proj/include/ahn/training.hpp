#pragma once

#include "ahn/compound.hpp"
#include "ahn/dataset.hpp"
#include "ahn/rng.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ahn {

struct TrainConfig {
  std::size_t n_molecules = 5;
  double learning_rate = 0.01;
  std::size_t max_iterations = 2000;
  std::uint64_t seed = 123;
  /// Stop once |delta overall error| stays below this for kPlateauWindow
  /// consecutive iterations. Zero disables the check.
  double error_tolerance = 1e-7;
  /// Half-width of the relocation box as a fraction of each feature's range.
  double relocation_fraction = 0.05;
  /// Worker threads for the per-molecule fits. Results do not depend on it.
  std::size_t threads = 1;

  void validate() const;
};

inline constexpr std::size_t kPlateauWindow = 10;

enum class StopReason { MaxIterations, Plateau, NonFiniteAbort };

std::string_view to_string(StopReason reason);

struct TrainReport {
  std::size_t iterations_run = 0;
  /// E_j of the iteration that produced the returned model.
  std::vector<double> per_molecule_errors;
  /// Molecules whose subset was empty in that iteration; their E_j is 0.
  std::vector<bool> empty_molecules;
  double overall_error = 0.0;
  std::size_t best_iteration = 0;
  /// Overall error of every iteration, in order.
  std::vector<double> error_history;
  /// Running minimum of error_history.
  std::vector<double> best_error_history;
  StopReason stop_reason = StopReason::MaxIterations;
  std::vector<std::string> warnings;
};

struct TrainResult {
  CompoundModel model;
  TrainReport report;
};

using Centers = std::vector<Eigen::VectorXd>;
using Partition = std::vector<std::vector<std::size_t>>;

/// Assigns each row to its nearest center (ties to the lowest index). Every
/// row index lands in exactly one subset; subsets keep ascending row order.
Partition partition(const Dataset& data, const Centers& centers);

/// Moves every empty molecule next to the non-empty molecule with the largest
/// error: mu_j = mu_k* + eps, eps_r uniform in +-(fraction * ranges[r]).
/// Non-empty centers are untouched. Throws TrainingError if all are empty.
Centers relocate_empty_centers(Centers centers, std::span<const double> errors,
                               const std::vector<bool>& empty, std::span<const double> ranges,
                               double fraction, Rng& rng);

/// mu_j <- mu_j - eta * (E_{j-1} - E_j) with E_0 = 0, the scalar step applied
/// to every coordinate. Throws NumericError if a center becomes non-finite.
Centers update_centers(Centers centers, std::span<const double> errors, double eta);

/// Trains a single saturated linear compound on `data`.
///
/// Each iteration partitions the data by the current centers, fits every
/// non-empty molecule by least squares, relocates empty molecules and moves
/// the centers. The model with the lowest overall error seen is returned.
TrainResult train_compound(const Dataset& data, const TrainConfig& cfg);

}  // namespace ahn
