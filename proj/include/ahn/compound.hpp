#pragma once

#include "ahn/dataset.hpp"
#include "ahn/molecule.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ahn {

/// Saturated linear chain of m >= 2 molecules (CH3, CH2, .., CH2, CH3).
struct CompoundModel {
  std::vector<Molecule> molecules;
  std::vector<std::string> feature_names;
  std::string target_name = "y";
  double learning_rate = 0.0;
  double overall_error = 0.0;

  std::size_t n_features() const noexcept { return feature_names.size(); }
  std::size_t size() const noexcept { return molecules.size(); }

  /// Checks the chain structure and every molecule. Throws InputError.
  void validate() const;
};

/// Hydrogen counts of a saturated linear chain: (3, 2, .., 2, 3).
std::vector<int> saturated_chain(std::size_t n_molecules);

/// Index of the molecule whose center is closest to x (Euclidean). Ties go to
/// the lowest index.
std::size_t nearest_molecule(std::span<const Molecule> molecules, std::span<const double> x);

double compound_eval(const CompoundModel& model, std::span<const double> x);

/// compound_eval for every row of x.
Eigen::VectorXd compound_predict(const CompoundModel& model, const RowMatrix& x);

/// Sum of squared residuals over all rows divided by N.
double overall_error(const CompoundModel& model, const Dataset& data);

/// Weighted combination of compounds, S(x) = sum_t alpha_t psi_t(x).
struct Mixture {
  std::vector<CompoundModel> compounds;
  std::vector<double> weights;

  void validate() const;
};

double mixture_eval(const Mixture& mixture, std::span<const double> x);

}  // namespace ahn
