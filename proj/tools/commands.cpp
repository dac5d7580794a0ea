#include "commands.hpp"

#include "ahn/csv.hpp"
#include "ahn/demo.hpp"
#include "ahn/errors.hpp"
#include "ahn/export.hpp"
#include "ahn/forecast.hpp"
#include "ahn/grid_search.hpp"
#include "ahn/model_io.hpp"
#include "ahn/split.hpp"
#include "ahn/summary.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

namespace ahn::cli {

namespace {

std::string number(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::to_string(value);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    out += (out.empty() ? "" : ",") + item;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& flag) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError(flag + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const std::string& flag) {
  std::vector<T> values;
  for (const auto& item : split_list(text)) {
    values.push_back(parse_number<T>(item, flag));
  }
  if (values.empty()) {
    throw InputError(flag + ": expected at least one value");
  }
  return values;
}

TrainConfig train_config(const CommandConfig& cfg) {
  TrainConfig train;
  train.n_molecules = parse_number<std::size_t>(cfg.molecules, "--molecules");
  train.learning_rate = parse_number<double>(cfg.learning_rate, "--learning-rate");
  train.max_iterations = cfg.max_iter;
  train.seed = cfg.seed;
  train.error_tolerance = cfg.tolerance;
  train.threads = cfg.threads;
  return train;
}

void write_text(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file_atomically(cfg.output, text);
  }
}

// Feature columns named on the command line, or every column but the target.
std::vector<std::string> feature_columns(const CommandConfig& cfg, const CsvTable& table) {
  if (!cfg.features.empty()) {
    return split_list(cfg.features);
  }
  std::vector<std::string> names;
  for (const auto& column : table.header) {
    if (column != cfg.target) {
      names.push_back(column);
    }
  }
  return names;
}

Dataset load_training_data(const CommandConfig& cfg) {
  if (cfg.demo == "sine") {
    return sine_demo();
  }
  const auto table = read_csv(cfg.input);
  return load_csv(cfg.input, feature_columns(cfg, table), cfg.target);
}

void warn(const TrainReport& report, std::ostream& err) {
  for (const auto& warning : report.warnings) {
    err << "warning: " << warning << '\n';
  }
}

}  // namespace

void validate(const CommandConfig& cfg) {
  const auto& cmd = cfg.subcommand;
  if (cmd == "fit" || cmd == "forecast") {
    train_config(cfg).validate();
  }
  if (cmd == "grid-search") {
    TrainConfig train;
    train.max_iterations = cfg.max_iter;
    train.error_tolerance = cfg.tolerance;
    train.threads = cfg.threads;
    for (auto m : parse_numbers<std::size_t>(cfg.molecules, "--molecules")) {
      train.n_molecules = m;
      train.validate();
    }
    for (auto eta : parse_numbers<double>(cfg.learning_rate, "--learning-rate")) {
      train.learning_rate = eta;
      train.validate();
    }
    if (cfg.folds < 2) {
      throw InputError("--folds must be >= 2");
    }
  }
  if (cmd == "fit" || cmd == "grid-search") {
    if (cfg.demo.empty() == cfg.input.empty()) {
      throw InputError("give exactly one of --input or --demo");
    }
    if (!cfg.demo.empty() && cfg.demo != "sine") {
      throw InputError("unknown --demo '" + cfg.demo + "' (available: sine)");
    }
    if (!cfg.input.empty() && cfg.target.empty()) {
      throw InputError("--target is required with --input");
    }
  }
  if (cmd == "fit" || cmd == "forecast") {
    if (cfg.split && !(*cfg.split > 0.0 && *cfg.split < 1.0)) {
      throw InputError("--split must lie in (0, 1)");
    }
    parse_split_mode(cfg.split_mode);
  }
  if (cmd == "forecast") {
    if (cfg.demo.empty() == cfg.input.empty()) {
      throw InputError("give exactly one of --input or --demo");
    }
    if (!cfg.demo.empty() && cfg.demo != "sinusoid") {
      throw InputError("unknown --demo '" + cfg.demo + "' (available: sinusoid)");
    }
    if (!cfg.input.empty() && cfg.target.empty()) {
      throw InputError("--target names the series column and is required with --input");
    }
    if (parse_split_mode(cfg.split_mode) != SplitMode::Chronological) {
      throw InputError("forecasting needs --split-mode chronological");
    }
    if (cfg.window < 1) {
      throw InputError("--window must be >= 1");
    }
  }
  if (cmd == "predict") {
    if (cfg.input.empty()) {
      throw InputError("--input is required");
    }
    if (cfg.mse && cfg.target.empty()) {
      throw InputError("--mse needs --target");
    }
  }
  if (cmd == "visualize" && cfg.format != "dot" && cfg.format != "json") {
    throw InputError("--format must be dot or json");
  }
}

int run_fit(const CommandConfig& cfg, Streams io) {
  const auto train = train_config(cfg);
  const auto data = load_training_data(cfg);
  std::optional<Dataset> test;
  TrainResult result = [&] {
    if (!cfg.split) {
      return train_compound(data, train);
    }
    auto [train_part, test_part] = ahn::split(data, *cfg.split, cfg.seed,
                                             parse_split_mode(cfg.split_mode));
    test.emplace(std::move(test_part));
    return train_compound(train_part, train);
  }();
  warn(result.report, io.err);
  if (!cfg.output.empty()) {
    save_model(result.model, cfg.output);
  }
  io.out << summary_text(result.model);
  if (test) {
    io.out << "\nTest error:\n " << format_fixed(overall_error(result.model, *test), 3) << " \n";
  }
  io.err << "stopped after " << result.report.iterations_run << " iterations ("
         << to_string(result.report.stop_reason) << ")\n";
  return 0;
}

int run_predict(const CommandConfig& cfg, Streams io) {
  const auto loaded = load_model(cfg.model);
  if (!std::holds_alternative<CompoundModel>(loaded)) {
    throw InputError("'" + cfg.model + "' holds a forecast model; use the forecast command");
  }
  const auto& model = std::get<CompoundModel>(loaded);
  const auto table = read_csv(cfg.input);
  std::vector<std::string> columns = cfg.features.empty() ? model.feature_names
                                                          : split_list(cfg.features);
  const bool names_match =
      columns.size() == model.n_features() &&
      std::all_of(columns.begin(), columns.end(), [&](const std::string& c) {
        return std::find(table.header.begin(), table.header.end(), c) != table.header.end();
      });
  if (!names_match) {
    throw InputError("feature names do not match: model expects [" + join(model.feature_names) +
                     "], input provides [" + join(table.header) + "]");
  }
  const RowMatrix x = numeric_columns(table, columns);
  const Eigen::VectorXd predicted = compound_predict(model, x);

  std::ostringstream csv;
  csv << "prediction\n";
  for (Eigen::Index i = 0; i < predicted.size(); ++i) {
    csv << number(predicted(i)) << '\n';
  }
  write_text(cfg, csv.str(), io.out);

  if (cfg.mse) {
    const std::array<std::string, 1> target{cfg.target};
    const RowMatrix y = numeric_columns(table, target);
    const double mse = y.rows() == 0 ? 0.0 : (y.col(0) - predicted).squaredNorm() /
                                                 static_cast<double>(y.rows());
    // Keep stdout pure CSV when the predictions go there.
    (cfg.output.empty() ? io.err : io.out) << "mse: " << number(mse) << '\n';
  }
  return 0;
}

int run_summary(const CommandConfig& cfg, Streams io) {
  io.out << summary_text(compound_of(load_model(cfg.model)));
  return 0;
}

int run_visualize(const CommandConfig& cfg, Streams io) {
  const auto loaded = load_model(cfg.model);
  const auto& model = compound_of(loaded);
  const std::string text =
      cfg.format == "dot" ? export_dot(model) : export_structure(model).dump(2) + "\n";
  write_text(cfg, text, io.out);
  return 0;
}

int run_forecast(const CommandConfig& cfg, Streams io) {
  const auto train = train_config(cfg);
  const auto series =
      cfg.demo == "sinusoid" ? sinusoid_series(221) : load_series(cfg.input, cfg.target);
  const WindowSpec spec{cfg.window};
  const auto run = run_forecast(series, cfg.split.value_or(0.7), spec, train);
  warn(run.training.report, io.err);

  if (!cfg.output.empty()) {
    std::ostringstream csv;
    csv << "t,actual,predicted,split\n";
    for (std::size_t i = 0; i < run.training.train_predictions.size(); ++i) {
      const std::size_t t = cfg.window + i;
      csv << t << ',' << number(series[t]) << ',' << number(run.training.train_predictions[i])
          << ",train\n";
    }
    for (std::size_t i = 0; i < run.test.predictions.size(); ++i) {
      const std::size_t t = run.first_test_index + i;
      csv << t << ',' << number(run.test.actual[i]) << ',' << number(run.test.predictions[i])
          << ",test\n";
    }
    write_file_atomically(cfg.output, csv.str());
  }
  if (!cfg.save_model.empty()) {
    save_model(run.training.model, cfg.save_model);
  }
  io.out << "train_mse: " << number(run.training.train_mse) << '\n'
         << "test_mse: " << number(run.test.mse) << '\n'
         << "persistence_mse: " << number(run.test.persistence_mse) << '\n'
         << "overall_error: " << number(run.training.model.compound.overall_error) << '\n';
  return 0;
}

int run_grid_search(const CommandConfig& cfg, Streams io) {
  const auto ms = parse_numbers<std::size_t>(cfg.molecules, "--molecules");
  const auto etas = parse_numbers<double>(cfg.learning_rate, "--learning-rate");
  TrainConfig base;
  base.max_iterations = cfg.max_iter;
  base.seed = cfg.seed;
  base.error_tolerance = cfg.tolerance;
  base.threads = cfg.threads;
  const auto data = load_training_data(cfg);
  const auto result = grid_search(data, ms, etas, cfg.folds, base);

  std::ostringstream csv;
  csv << "molecules,learning_rate,mean_mse,best\n";
  for (const auto& cell : result.table) {
    const bool best = cell.n_molecules == result.best.n_molecules &&
                      cell.learning_rate == result.best.learning_rate;
    csv << cell.n_molecules << ',' << number(cell.learning_rate) << ',' << number(cell.mean_mse)
        << ',' << (best ? "true" : "false") << '\n';
  }
  write_text(cfg, csv.str(), io.out);
  return 0;
}

}  // namespace ahn::cli
