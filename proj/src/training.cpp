#include "ahn/training.hpp"

#include "ahn/errors.hpp"
#include "ahn/lse.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>

namespace ahn {

namespace {

// Runs body(j) for j in [0, count) on up to `threads` workers. Each j is
// handled by exactly one worker, so results written per j do not depend on
// the thread count.
template <typename Body>
void for_each_index(std::size_t count, std::size_t threads, Body&& body) {
  const std::size_t workers = std::min(threads, count);
  if (workers <= 1) {
    for (std::size_t j = 0; j < count; ++j) {
      body(j);
    }
    return;
  }
  std::vector<std::exception_ptr> failures(count);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < count; j += workers) {
          try {
            body(j);
          } catch (...) {
            failures[j] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) {
      std::rethrow_exception(failure);
    }
  }
}

Centers initial_centers(const Dataset& data, std::size_t m, Rng& rng) {
  const std::size_t n_rows = data.rows();
  auto picks = sample_without_replacement(rng, n_rows, std::min(n_rows, m));
  while (picks.size() < m) {
    picks.push_back(rng.below(n_rows));
  }
  Centers centers;
  centers.reserve(m);
  for (auto row : picks) {
    const auto x = data.row(row);
    centers.emplace_back(Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())));
  }
  return centers;
}

}  // namespace

void TrainConfig::validate() const {
  if (n_molecules < 2) {
    throw InputError("number of molecules must be >= 2, got " + std::to_string(n_molecules));
  }
  if (!(learning_rate > 0.0 && learning_rate < 1.0)) {
    throw InputError("learning rate must lie in (0, 1), got " + std::to_string(learning_rate));
  }
  if (max_iterations < 1) {
    throw InputError("max iterations must be >= 1");
  }
  if (!(error_tolerance >= 0.0) || !std::isfinite(error_tolerance)) {
    throw InputError("error tolerance must be finite and >= 0");
  }
  if (!(relocation_fraction >= 0.0) || !std::isfinite(relocation_fraction)) {
    throw InputError("relocation fraction must be finite and >= 0");
  }
  if (threads < 1) {
    throw InputError("thread count must be >= 1");
  }
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::MaxIterations:
      return "max-iter";
    case StopReason::Plateau:
      return "plateau";
    case StopReason::NonFiniteAbort:
      return "non-finite-abort";
  }
  return "unknown";
}

Partition partition(const Dataset& data, const Centers& centers) {
  if (centers.empty()) {
    throw InputError("partition needs at least one center");
  }
  const auto n = static_cast<Eigen::Index>(data.features());
  for (const auto& c : centers) {
    if (c.size() != n) {
      throw InputError("center has " + std::to_string(c.size()) + " coordinates, data has " +
                       std::to_string(n) + " features");
    }
  }
  Partition parts(centers.size());
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto x = data.row(i);
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < centers.size(); ++j) {
      double d = 0.0;
      for (Eigen::Index r = 0; r < n; ++r) {
        const double diff = x[static_cast<std::size_t>(r)] - centers[j](r);
        d += diff * diff;
      }
      if (d < best_distance) {
        best_distance = d;
        best = j;
      }
    }
    parts[best].push_back(i);
  }
  return parts;
}

Centers relocate_empty_centers(Centers centers, std::span<const double> errors,
                               const std::vector<bool>& empty, std::span<const double> ranges,
                               double fraction, Rng& rng) {
  const std::size_t m = centers.size();
  if (errors.size() != m || empty.size() != m) {
    throw InputError("relocation needs one error and one empty flag per molecule");
  }
  std::optional<std::size_t> worst;
  for (std::size_t j = 0; j < m; ++j) {
    if (!empty[j] && (!worst || errors[j] > errors[*worst])) {
      worst = j;
    }
  }
  if (!worst) {
    throw TrainingError("every molecule is empty; nothing to relocate next to");
  }
  const Eigen::VectorXd anchor = centers[*worst];
  if (ranges.size() != static_cast<std::size_t>(anchor.size())) {
    throw InputError("relocation needs one range per feature");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!empty[j]) {
      continue;
    }
    Eigen::VectorXd moved = anchor;
    for (Eigen::Index r = 0; r < moved.size(); ++r) {
      const double half_width = fraction * ranges[static_cast<std::size_t>(r)];
      moved(r) += rng.uniform(-half_width, half_width);
    }
    centers[j] = std::move(moved);
  }
  return centers;
}

Centers update_centers(Centers centers, std::span<const double> errors, double eta) {
  if (errors.size() != centers.size()) {
    throw InputError("center update needs one error per molecule");
  }
  double previous = 0.0;  // E_0
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const double step = eta * (previous - errors[j]);
    centers[j].array() -= step;
    previous = errors[j];
    if (!centers[j].allFinite()) {
      throw NumericError("center " + std::to_string(j + 1) + " became non-finite");
    }
  }
  return centers;
}

TrainResult train_compound(const Dataset& data, const TrainConfig& cfg) {
  cfg.validate();
  const std::size_t m = cfg.n_molecules;
  const std::size_t n_rows = data.rows();

  TrainReport report;
  if (n_rows < m) {
    report.warnings.push_back("dataset has " + std::to_string(n_rows) + " rows but " +
                              std::to_string(m) + " molecules; some molecules will start empty");
  }

  Rng rng(cfg.seed);
  Centers centers = initial_centers(data, m, rng);
  const auto chain = saturated_chain(m);
  std::vector<Molecule> molecules;
  molecules.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    molecules.push_back(Molecule::zeros(chain[j], centers[j]));
  }
  const std::vector<double> ranges = data.feature_ranges();

  std::vector<double> errors(m, 0.0);
  std::vector<bool> empty(m, false);
  std::vector<std::optional<MoleculeFit>> fits(m);

  std::optional<std::vector<Molecule>> best;
  double best_error = std::numeric_limits<double>::infinity();
  double previous_error = std::numeric_limits<double>::quiet_NaN();
  std::size_t flat_iterations = 0;
  report.stop_reason = StopReason::MaxIterations;

  for (std::size_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    const Partition parts = partition(data, centers);

    try {
      for_each_index(m, cfg.threads, [&](std::size_t j) {
        fits[j].reset();
        if (!parts[j].empty()) {
          fits[j] = fit_molecule_lse(data, parts[j], chain[j]);
        }
      });
    } catch (const NumericError&) {
      report.stop_reason = StopReason::NonFiniteAbort;
      break;
    }

    double sse = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      molecules[j].center = centers[j];
      if (fits[j]) {
        molecules[j].carbon_value = fits[j]->carbon_value;
        molecules[j].hydrogen_coeffs = fits[j]->hydrogen_coeffs;
        errors[j] = fits[j]->error;
        empty[j] = false;
        sse += fits[j]->error * static_cast<double>(parts[j].size());
      } else {
        // Empty molecules keep last iteration's parameters and contribute E_j = 0.
        errors[j] = 0.0;
        empty[j] = true;
      }
    }
    const double current = sse / static_cast<double>(n_rows);
    report.iterations_run = iter;
    if (!std::isfinite(current)) {
      report.stop_reason = StopReason::NonFiniteAbort;
      break;
    }

    report.error_history.push_back(current);
    if (current < best_error) {
      best_error = current;
      best = molecules;
      report.best_iteration = iter;
      report.per_molecule_errors = errors;
      report.empty_molecules = empty;
    }
    report.best_error_history.push_back(best_error);

    if (iter > 1 && std::abs(current - previous_error) < cfg.error_tolerance) {
      ++flat_iterations;
    } else {
      flat_iterations = 0;
    }
    previous_error = current;
    if (flat_iterations >= kPlateauWindow) {
      report.stop_reason = StopReason::Plateau;
      break;
    }

    if (std::find(empty.begin(), empty.end(), true) != empty.end()) {
      centers = relocate_empty_centers(std::move(centers), errors, empty, ranges,
                                       cfg.relocation_fraction, rng);
    }
    try {
      centers = update_centers(std::move(centers), errors, cfg.learning_rate);
    } catch (const NumericError&) {
      report.stop_reason = StopReason::NonFiniteAbort;
      break;
    }
  }

  if (!best) {
    throw NumericError("training aborted before any finite model was produced");
  }

  TrainResult result;
  result.model.molecules = std::move(*best);
  result.model.feature_names = data.feature_names();
  result.model.target_name = data.target_name();
  result.model.learning_rate = cfg.learning_rate;
  result.model.overall_error = best_error;
  report.overall_error = best_error;
  result.report = std::move(report);
  return result;
}

}  // namespace ahn
