#include "ahn/lse.hpp"

#include "ahn/errors.hpp"
#include "ahn/molecule.hpp"

#include <cmath>
#include <string>

namespace ahn {

namespace {

// Pivots below this fraction of the largest one count as zero, which selects
// the minimum-norm solution on (numerically) rank-deficient subsets.
constexpr double kRankThreshold = 1e-12;

}  // namespace

Eigen::MatrixXd design_matrix(const Dataset& data, std::span<const std::size_t> rows,
                              int hydrogen_count) {
  const auto cols = parameter_count(hydrogen_count, data.features());
  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  Eigen::VectorXd buffer(static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    fill_design_row(data.row(rows[i]), hydrogen_count, {buffer.data(), cols});
    a.row(static_cast<Eigen::Index>(i)) = buffer.transpose();
  }
  return a;
}

MoleculeFit fit_molecule_lse(const Dataset& data, std::span<const std::size_t> rows,
                             int hydrogen_count) {
  if (hydrogen_count < kMinHydrogens || hydrogen_count > kMaxHydrogens) {
    throw InputError("hydrogen count must be in 1..4, got " + std::to_string(hydrogen_count));
  }
  if (rows.empty()) {
    throw EmptySubsetError("cannot fit a molecule to an empty subset");
  }

  const Eigen::MatrixXd a = design_matrix(data, rows, hydrogen_count);
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    y(static_cast<Eigen::Index>(i)) = data.y()(static_cast<Eigen::Index>(rows[i]));
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(kRankThreshold);
  cod.compute(a);
  const Eigen::VectorXd params = cod.solve(y);
  if (!params.allFinite()) {
    throw NumericError("least-squares solve produced non-finite parameters");
  }

  const Eigen::VectorXd residual = y - a * params;
  MoleculeFit fit;
  Molecule shape = Molecule::zeros(hydrogen_count, Eigen::VectorXd::Zero(
                                                       static_cast<Eigen::Index>(data.features())));
  assign_parameters(shape, params);
  fit.carbon_value = shape.carbon_value;
  fit.hydrogen_coeffs = std::move(shape.hydrogen_coeffs);
  fit.error = residual.squaredNorm() / static_cast<double>(rows.size());
  fit.rank = static_cast<std::size_t>(cod.rank());
  fit.n_parameters = static_cast<std::size_t>(a.cols());
  if (!std::isfinite(fit.error)) {
    throw NumericError("least-squares residual is non-finite");
  }
  return fit;
}

}  // namespace ahn
