#include "ahn/forecast.hpp"

#include "ahn/errors.hpp"
#include "ahn/split.hpp"

#include <cmath>
#include <string>

namespace ahn {

void ForecastModel::validate() const {
  window_spec.validate();
  compound.validate();
  if (compound.n_features() != window_spec.window) {
    throw InputError("forecast compound has " + std::to_string(compound.n_features()) +
                     " features but the window is " + std::to_string(window_spec.window));
  }
  x_scaler.validate();
  y_scaler.validate();
  if (x_scaler.size() != window_spec.window || y_scaler.size() != 1) {
    throw InputError("forecast scalers must cover the window columns and one delta column");
  }
}

ForecastTraining train_forecaster(std::span<const double> series, double split_fraction,
                                  const WindowSpec& window_spec, const TrainConfig& cfg) {
  cfg.validate();
  const Dataset windows = make_windows(series, window_spec);
  const auto idx = split_indices(windows.rows(), split_fraction, 0, SplitMode::Chronological);
  const Dataset train = windows.subset(idx.train);

  // Flat series or constant deltas are legitimate here, so constant columns
  // are centered only.
  ForecastModel model;
  model.window_spec = window_spec;
  model.x_scaler = fit_scaler(train.x(), train.feature_names(), ConstantColumns::UnitScale);
  model.y_scaler = fit_scaler(RowMatrix(train.y()), {train.target_name()}, ConstantColumns::UnitScale);

  const RowMatrix x_norm = apply_scaler(model.x_scaler, train.x());
  const RowMatrix y_norm = apply_scaler(model.y_scaler, RowMatrix(train.y()));
  const Dataset normalized(x_norm, y_norm.col(0), train.feature_names(), train.target_name());

  auto trained = train_compound(normalized, cfg);
  model.compound = std::move(trained.model);

  ForecastTraining out;
  out.report = std::move(trained.report);
  out.train_windows = idx.train.size();
  const std::size_t w = window_spec.window;
  double sse = 0.0;
  for (std::size_t i = 0; i < out.train_windows; ++i) {
    const double predicted = predict_one_step(model, series.subspan(i, w));
    const double residual = series[i + w] - predicted;
    sse += residual * residual;
    out.train_predictions.push_back(predicted);
  }
  out.train_mse = sse / static_cast<double>(out.train_windows);
  out.model = std::move(model);
  return out;
}

double predict_one_step(const ForecastModel& model, std::span<const double> last_values) {
  const std::size_t w = model.window_spec.window;
  if (last_values.size() != w) {
    throw InputError("forecaster needs exactly " + std::to_string(w) + " trailing values, got " +
                     std::to_string(last_values.size()));
  }
  std::vector<double> normalized(w);
  for (std::size_t c = 0; c < w; ++c) {
    if (!std::isfinite(last_values[c])) {
      throw InputError("forecaster history contains non-finite values");
    }
    normalized[c] = (last_values[c] - model.x_scaler.means[c]) / model.x_scaler.stds[c];
  }
  const double delta_norm = compound_eval(model.compound, normalized);
  const double delta = delta_norm * model.y_scaler.stds[0] + model.y_scaler.means[0];
  return last_values.back() + delta;
}

RollingEvaluation rolling_evaluate(const ForecastModel& model, std::span<const double> segment) {
  const std::size_t w = model.window_spec.window;
  if (segment.size() < w + 1) {
    throw InputError("test segment of length " + std::to_string(segment.size()) +
                     " is shorter than one window plus a target (" + std::to_string(w + 1) + ")");
  }
  RollingEvaluation out;
  double sse = 0.0;
  double persistence_sse = 0.0;
  for (std::size_t t = w; t < segment.size(); ++t) {
    const double predicted = predict_one_step(model, segment.subspan(t - w, w));
    const double actual = segment[t];
    sse += (actual - predicted) * (actual - predicted);
    persistence_sse += (actual - segment[t - 1]) * (actual - segment[t - 1]);
    out.predictions.push_back(predicted);
    out.actual.push_back(actual);
  }
  const auto steps = static_cast<double>(out.predictions.size());
  out.mse = sse / steps;
  out.persistence_mse = persistence_sse / steps;
  return out;
}

ForecastRun run_forecast(std::span<const double> series, double split_fraction,
                         const WindowSpec& window_spec, const TrainConfig& cfg) {
  ForecastRun run;
  run.training = train_forecaster(series, split_fraction, window_spec, cfg);
  const std::size_t start = run.training.train_windows;
  run.test = rolling_evaluate(run.training.model, series.subspan(start));
  run.first_test_index = start + window_spec.window;
  return run;
}

}  // namespace ahn
