// ahn: fit, inspect and apply Artificial Hydrocarbon Network models.
//
// Exit codes: 0 success, 1 user or data error, 2 internal error.

#include "commands.hpp"

#include "ahn/errors.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <map>

namespace {

using ahn::cli::CommandConfig;

void add_data_flags(CLI::App* cmd, CommandConfig& cfg) {
  cmd->add_option("--input", cfg.input, "CSV file with a header row");
  cmd->add_option("--features", cfg.features,
                  "Comma-separated feature columns (default: all but the target)");
  cmd->add_option("--target", cfg.target, "Target column");
}

void add_train_flags(CLI::App* cmd, CommandConfig& cfg) {
  cmd->add_option("--max-iter", cfg.max_iter, "Training iterations")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--tolerance", cfg.tolerance,
                  "Stop once the error changes less than this for 10 iterations (0 disables)")
      ->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads for molecule fits")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CommandConfig cfg;
  CLI::App app{"Artificial Hydrocarbon Networks"};
  app.require_subcommand(1);

  auto* fit = app.add_subcommand("fit", "Train a model and print its summary");
  add_data_flags(fit, cfg);
  add_train_flags(fit, cfg);
  fit->add_option("--demo", cfg.demo, "Built-in data set instead of --input (sine)");
  fit->add_option("--output", cfg.output, "Model file to write");
  fit->add_option("--molecules", cfg.molecules, "Number of molecules")->capture_default_str();
  fit->add_option("--learning-rate", cfg.learning_rate, "Center learning rate")
      ->capture_default_str();
  fit->add_option("--split", cfg.split, "Train on this fraction, report MSE on the rest");
  fit->add_option("--split-mode", cfg.split_mode, "random or chronological")->capture_default_str();

  auto* predict = app.add_subcommand("predict", "Apply a model to a CSV file");
  predict->add_option("--model", cfg.model, "Model file")->required();
  add_data_flags(predict, cfg);
  predict->add_option("--output", cfg.output, "Predictions CSV (default: stdout)");
  predict->add_flag("--mse", cfg.mse, "Report the MSE against --target");

  auto* summary = app.add_subcommand("summary", "Print a model summary");
  summary->add_option("--model", cfg.model, "Model file")->required();

  auto* visualize = app.add_subcommand("visualize", "Export the network structure");
  visualize->add_option("--model", cfg.model, "Model file")->required();
  visualize->add_option("--format", cfg.format, "dot or json")->capture_default_str();
  visualize->add_option("--output", cfg.output, "Output file (default: stdout)");

  auto* forecast = app.add_subcommand("forecast", "One-step-ahead forecasting of a series");
  forecast->add_option("--input", cfg.input, "CSV file with the series");
  forecast->add_option("--target", cfg.target, "Series column");
  forecast->add_option("--demo", cfg.demo, "Built-in series instead of --input (sinusoid)");
  add_train_flags(forecast, cfg);
  forecast->add_option("--molecules", cfg.molecules, "Number of molecules")->capture_default_str();
  forecast->add_option("--learning-rate", cfg.learning_rate, "Center learning rate")
      ->capture_default_str();
  forecast->add_option("--window", cfg.window, "Lagged observations per input")
      ->capture_default_str();
  forecast->add_option("--split", cfg.split, "Fraction of windows used for training (0.7)");
  forecast->add_option("--split-mode", cfg.split_mode, "Must be chronological");
  forecast->add_option("--output", cfg.output, "Per-step predictions CSV");
  forecast->add_option("--save-model", cfg.save_model, "Forecast model file to write");

  auto* grid = app.add_subcommand("grid-search", "Cross-validate molecule counts and learning rates");
  add_data_flags(grid, cfg);
  add_train_flags(grid, cfg);
  grid->add_option("--demo", cfg.demo, "Built-in data set instead of --input (sine)");
  grid->add_option("--molecules", cfg.molecules, "Comma-separated molecule counts")
      ->capture_default_str();
  grid->add_option("--learning-rate", cfg.learning_rate, "Comma-separated learning rates")
      ->capture_default_str();
  grid->add_option("--folds", cfg.folds, "Cross-validation folds")->capture_default_str();
  grid->add_option("--output", cfg.output, "Table CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const std::map<std::string, std::function<int(const CommandConfig&, ahn::cli::Streams)>>
      commands{{"fit", ahn::cli::run_fit},         {"predict", ahn::cli::run_predict},
               {"summary", ahn::cli::run_summary}, {"visualize", ahn::cli::run_visualize},
               {"forecast", ahn::cli::run_forecast}, {"grid-search", ahn::cli::run_grid_search}};
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (forecast->parsed() && forecast->count("--split-mode") == 0) {
    cfg.split_mode = "chronological";
  }

  try {
    ahn::cli::validate(cfg);
    return commands.at(cfg.subcommand)(cfg, {std::cout, std::cerr});
  } catch (const ahn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
