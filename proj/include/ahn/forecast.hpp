#pragma once

#include "ahn/compound.hpp"
#include "ahn/scaler.hpp"
#include "ahn/training.hpp"
#include "ahn/windows.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ahn {

/// One-step-ahead forecaster y_{t+1} = y_t + f(y_{t-w+1}, .., y_t), where f
/// is a compound trained on standardized windows and standardized deltas.
struct ForecastModel {
  CompoundModel compound;
  Scaler x_scaler;
  Scaler y_scaler;
  WindowSpec window_spec;

  void validate() const;
};

struct ForecastTraining {
  ForecastModel model;
  TrainReport report;
  /// Number of windows used for training; the rest are test windows.
  std::size_t train_windows = 0;
  /// Reconstructed level predictions for the training targets.
  std::vector<double> train_predictions;
  /// MSE of train_predictions in original series units.
  double train_mse = 0.0;
};

/// Windows the whole series, keeps the first floor(fraction * windows) for
/// training, fits the scalers on those rows only and trains the compound.
ForecastTraining train_forecaster(std::span<const double> series, double split_fraction,
                                  const WindowSpec& window_spec, const TrainConfig& cfg);

/// Predicts the next level from exactly w trailing observations.
double predict_one_step(const ForecastModel& model, std::span<const double> last_values);

struct RollingEvaluation {
  std::vector<double> predictions;
  std::vector<double> actual;
  double mse = 0.0;
  /// MSE of the zero-delta forecaster y_{t+1} = y_t on the same targets.
  double persistence_mse = 0.0;
};

/// One-step predictions over a contiguous segment using the true trailing
/// window each step (no recursive feedback). Predicts segment[w..] so the
/// segment should start w observations before the first target.
RollingEvaluation rolling_evaluate(const ForecastModel& model, std::span<const double> segment);

/// Full workflow: train on the leading windows and roll over the rest.
struct ForecastRun {
  ForecastTraining training;
  RollingEvaluation test;
  /// Series index of the first test target.
  std::size_t first_test_index = 0;
};

ForecastRun run_forecast(std::span<const double> series, double split_fraction,
                         const WindowSpec& window_spec, const TrainConfig& cfg);

}  // namespace ahn
