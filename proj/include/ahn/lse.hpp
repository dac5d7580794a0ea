#pragma once

#include "ahn/dataset.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>

namespace ahn {

struct MoleculeFit {
  double carbon_value = 0.0;
  Eigen::MatrixXd hydrogen_coeffs;  // k x n
  /// Mean squared residual over the subset.
  double error = 0.0;
  /// Numerical rank of the design matrix.
  std::size_t rank = 0;
  std::size_t n_parameters = 0;

  bool full_rank() const noexcept { return rank == n_parameters; }
};

/// Design matrix of the given rows, one design_row per data row.
Eigen::MatrixXd design_matrix(const Dataset& data, std::span<const std::size_t> rows,
                              int hydrogen_count);

/// Least-squares fit of one molecule to the rows of `data` listed in `rows`.
///
/// Uses a complete orthogonal decomposition so rank-deficient or
/// under-determined subsets get the minimum-norm solution. Throws
/// EmptySubsetError when `rows` is empty and NumericError when the solve
/// produces non-finite values.
MoleculeFit fit_molecule_lse(const Dataset& data, std::span<const std::size_t> rows,
                             int hydrogen_count);

}  // namespace ahn
