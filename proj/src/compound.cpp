#include "ahn/compound.hpp"

#include "ahn/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ahn {

namespace {

void check_width(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw InputError("model expects " + std::to_string(expected) + " features, got " +
                     std::to_string(got));
  }
}

double squared_distance(const Eigen::VectorXd& center, std::span<const double> x) {
  double d = 0.0;
  for (std::size_t r = 0; r < x.size(); ++r) {
    const double diff = x[r] - center(static_cast<Eigen::Index>(r));
    d += diff * diff;
  }
  return d;
}

}  // namespace

std::vector<int> saturated_chain(std::size_t n_molecules) {
  if (n_molecules < 2) {
    throw InputError("a compound needs at least 2 molecules, got " + std::to_string(n_molecules));
  }
  std::vector<int> counts(n_molecules, 2);
  counts.front() = 3;
  counts.back() = 3;
  return counts;
}

void CompoundModel::validate() const {
  const auto chain = saturated_chain(molecules.size());
  if (feature_names.empty()) {
    throw InputError("compound has no feature names");
  }
  for (std::size_t j = 0; j < molecules.size(); ++j) {
    const auto& mol = molecules[j];
    mol.validate();
    if (mol.hydrogen_count != chain[j]) {
      throw InputError("molecule " + std::to_string(j + 1) + " has " +
                       std::to_string(mol.hydrogen_count) + " hydrogens, chain position needs " +
                       std::to_string(chain[j]));
    }
    if (mol.n_features() != n_features()) {
      throw InputError("molecule " + std::to_string(j + 1) + " has " +
                       std::to_string(mol.n_features()) + " features, compound has " +
                       std::to_string(n_features()));
    }
  }
  if (!std::isfinite(learning_rate) || !std::isfinite(overall_error) || overall_error < 0.0) {
    throw InputError("compound metadata must be finite with non-negative overall error");
  }
}

std::size_t nearest_molecule(std::span<const Molecule> molecules, std::span<const double> x) {
  if (molecules.empty()) {
    throw InputError("no molecules to choose from");
  }
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < molecules.size(); ++j) {
    const double d = squared_distance(molecules[j].center, x);
    if (d < best_distance) {
      best_distance = d;
      best = j;
    }
  }
  return best;
}

double compound_eval(const CompoundModel& model, std::span<const double> x) {
  check_width(model.n_features(), x.size());
  return molecule_eval(model.molecules[nearest_molecule(model.molecules, x)], x);
}

Eigen::VectorXd compound_predict(const CompoundModel& model, const RowMatrix& x) {
  check_width(model.n_features(), static_cast<std::size_t>(x.cols()));
  Eigen::VectorXd out(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    out(i) = compound_eval(model, {x.row(i).data(), static_cast<std::size_t>(x.cols())});
  }
  return out;
}

double overall_error(const CompoundModel& model, const Dataset& data) {
  check_width(model.n_features(), data.features());
  double sse = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const double residual = data.y()(static_cast<Eigen::Index>(i)) - compound_eval(model, data.row(i));
    sse += residual * residual;
  }
  return sse / static_cast<double>(data.rows());
}

void Mixture::validate() const {
  if (compounds.empty()) {
    throw InputError("mixture has no compounds");
  }
  if (compounds.size() != weights.size()) {
    throw InputError("mixture has " + std::to_string(compounds.size()) + " compounds but " +
                     std::to_string(weights.size()) + " weights");
  }
  for (const auto& c : compounds) {
    if (c.n_features() != compounds.front().n_features()) {
      throw InputError("mixture compounds disagree on feature count");
    }
  }
}

double mixture_eval(const Mixture& mixture, std::span<const double> x) {
  mixture.validate();
  double value = mixture.weights[0] * compound_eval(mixture.compounds[0], x);
  for (std::size_t t = 1; t < mixture.compounds.size(); ++t) {
    value += mixture.weights[t] * compound_eval(mixture.compounds[t], x);
  }
  return value;
}

}  // namespace ahn
