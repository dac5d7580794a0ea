#pragma once

#include "ahn/training.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ahn::cli {

// Everything the subcommands read from the command line. Numeric flags that
// accept lists in grid-search are kept as text and parsed by the command.
struct CommandConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  std::string model;
  std::string save_model;
  std::string features;
  std::string target;
  std::string demo;
  std::string format = "dot";
  std::string molecules = "5";
  std::string learning_rate = "0.01";
  std::size_t max_iter = 2000;
  std::uint64_t seed = 123;
  double tolerance = 1e-7;
  std::size_t threads = 1;
  std::optional<double> split;
  std::string split_mode = "random";
  std::size_t window = 3;
  std::size_t folds = 5;
  bool mse = false;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Rejects bad flag values before any file is touched. Throws InputError.
void validate(const CommandConfig& cfg);

int run_fit(const CommandConfig& cfg, Streams io);
int run_predict(const CommandConfig& cfg, Streams io);
int run_summary(const CommandConfig& cfg, Streams io);
int run_visualize(const CommandConfig& cfg, Streams io);
int run_forecast(const CommandConfig& cfg, Streams io);
int run_grid_search(const CommandConfig& cfg, Streams io);

}  // namespace ahn::cli
