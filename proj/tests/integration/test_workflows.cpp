// End-to-end library workflows: CSV -> split -> standardize -> train -> predict.

#include "ahn/compound.hpp"
#include "ahn/csv.hpp"
#include "ahn/model_io.hpp"
#include "ahn/scaler.hpp"
#include "ahn/split.hpp"
#include "ahn/training.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace ahn;
namespace fs = std::filesystem;

namespace {

// Smooth, power-plant-shaped table: output falls with temperature and humidity.
fs::path write_plant_csv(std::size_t rows) {
  const auto path = fs::temp_directory_path() / "ahn_workflow_plant.csv";
  std::ofstream out(path);
  out << "temperature,relative_humidity,energy_power\n";
  out.precision(17);
  for (std::size_t i = 0; i < rows; ++i) {
    const double t = 2.0 + 33.0 * std::fmod(0.618034 * static_cast<double>(i), 1.0);
    const double rh = 25.0 + 75.0 * std::fmod(0.414214 * static_cast<double>(i) + 0.3, 1.0);
    const double e = 495.0 - 2.2 * t - 0.08 * rh + 4.0 * std::sin(t / 5.0);
    out << t << ',' << rh << ',' << e << '\n';
  }
  return path;
}

std::vector<double> column(const RowMatrix& m, Eigen::Index c) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out.push_back(m(i, c));
  }
  return out;
}

}  // namespace

TEST_CASE("power-plant workflow with train-only standardization") {
  const std::vector<std::string> features{"temperature", "relative_humidity"};
  const auto data = load_csv(write_plant_csv(400), features, "energy_power");
  CHECK(data.features() == 2);
  CHECK(data.target_name() == "energy_power");

  const auto [train, test] = split(data, 0.7, 2018, SplitMode::Random);
  CHECK(train.rows() == 280);
  CHECK(test.rows() == 120);

  const auto scaler = fit_scaler(train);
  // Statistics come from the training rows only.
  RowMatrix train_x = train.x();
  for (Eigen::Index c = 0; c < 2; ++c) {
    const auto values = column(train_x, c);
    CHECK(std::abs(scaler.means[c] - oracle::mean(values)) <= 1e-12 * std::abs(oracle::mean(values)));
    CHECK(std::abs(scaler.stds[c] - oracle::sample_std(values)) <= 1e-12 * oracle::sample_std(values));
  }
  const std::vector<double> train_y(train.y().data(), train.y().data() + train.rows());
  CHECK(std::abs(scaler.means[2] - oracle::mean(train_y)) <= 1e-12 * oracle::mean(train_y));
  const std::vector<double> all_y(data.y().data(), data.y().data() + data.rows());
  CHECK(scaler.means[2] != oracle::mean(all_y));

  TrainConfig cfg;
  cfg.n_molecules = 5;
  cfg.learning_rate = 0.1;
  cfg.max_iterations = 200;
  const auto result = train_compound(apply_scaler(scaler, train), cfg);

  const auto test_scaled = apply_scaler(scaler, test);
  const Eigen::VectorXd predicted_scaled = compound_predict(result.model, test_scaled.x());
  const auto predicted = invert_scaler(
      scaler, {predicted_scaled.data(), static_cast<std::size_t>(predicted_scaled.size())},
      "energy_power");
  double sse = 0.0;
  for (std::size_t i = 0; i < test.rows(); ++i) {
    sse += std::pow(predicted[i] - test.y()(static_cast<Eigen::Index>(i)), 2);
  }
  const double test_mse = sse / static_cast<double>(test.rows());
  const double variance = std::pow(oracle::sample_std(all_y), 2);
  CHECK(test_mse < 0.01 * variance);
}

TEST_CASE("trained model survives a save/load cycle inside a workflow") {
  const std::vector<std::string> features{"temperature", "relative_humidity"};
  const auto data = load_csv(write_plant_csv(120), features, "energy_power");
  TrainConfig cfg;
  cfg.n_molecules = 3;
  cfg.max_iterations = 60;
  const auto model = train_compound(data, cfg).model;
  const auto path = fs::temp_directory_path() / "ahn_workflow_model.json";
  save_model(model, path);
  const auto loaded = std::get<CompoundModel>(load_model(path));
  CHECK(compound_predict(loaded, data.x()) == compound_predict(model, data.x()));
  CHECK(overall_error(loaded, data) == overall_error(model, data));
}
