#include "ahn/molecule.hpp"

#include "ahn/errors.hpp"

#include <cmath>
#include <string>

namespace ahn {

namespace {

void check_hydrogen_count(int k) {
  if (k < kMinHydrogens || k > kMaxHydrogens) {
    throw InputError("hydrogen count must be in 1..4, got " + std::to_string(k));
  }
}

bool all_finite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      return false;
    }
  }
  return true;
}

}  // namespace

void Molecule::validate() const {
  check_hydrogen_count(hydrogen_count);
  if (hydrogen_coeffs.rows() != hydrogen_count || hydrogen_coeffs.cols() != center.size()) {
    throw InputError("hydrogen coefficients must be " + std::to_string(hydrogen_count) + "x" +
                     std::to_string(center.size()) + ", got " +
                     std::to_string(hydrogen_coeffs.rows()) + "x" +
                     std::to_string(hydrogen_coeffs.cols()));
  }
  if (center.size() < 1) {
    throw InputError("molecule center is empty");
  }
  if (!std::isfinite(carbon_value) || !hydrogen_coeffs.allFinite() || !center.allFinite()) {
    throw InputError("molecule has non-finite parameters");
  }
}

Molecule Molecule::zeros(int hydrogen_count, Eigen::VectorXd center) {
  check_hydrogen_count(hydrogen_count);
  Molecule mol;
  mol.hydrogen_count = hydrogen_count;
  mol.hydrogen_coeffs = Eigen::MatrixXd::Zero(hydrogen_count, center.size());
  mol.center = std::move(center);
  return mol;
}

std::size_t parameter_count(int hydrogen_count, std::size_t n_features) {
  return 1 + static_cast<std::size_t>(hydrogen_count) * n_features;
}

void fill_design_row(std::span<const double> x, int hydrogen_count, std::span<double> out) {
  std::size_t pos = 0;
  out[pos++] = 1.0;
  for (double xr : x) {
    double power = 1.0;
    for (int i = 0; i < hydrogen_count; ++i) {
      power *= xr;
      out[pos++] = power;
    }
  }
}

Eigen::VectorXd design_row(std::span<const double> x, int hydrogen_count) {
  check_hydrogen_count(hydrogen_count);
  if (!all_finite(x)) {
    throw InputError("design row input contains non-finite values");
  }
  Eigen::VectorXd row(static_cast<Eigen::Index>(parameter_count(hydrogen_count, x.size())));
  fill_design_row(x, hydrogen_count, {row.data(), static_cast<std::size_t>(row.size())});
  return row;
}

Eigen::VectorXd parameter_vector(const Molecule& mol) {
  const auto n = mol.n_features();
  Eigen::VectorXd params(static_cast<Eigen::Index>(parameter_count(mol.hydrogen_count, n)));
  Eigen::Index pos = 0;
  params(pos++) = mol.carbon_value;
  for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(n); ++r) {
    for (Eigen::Index i = 0; i < mol.hydrogen_count; ++i) {
      params(pos++) = mol.hydrogen_coeffs(i, r);
    }
  }
  return params;
}

void assign_parameters(Molecule& mol, const Eigen::VectorXd& params) {
  const auto n = mol.n_features();
  if (static_cast<std::size_t>(params.size()) != parameter_count(mol.hydrogen_count, n)) {
    throw InputError("expected " + std::to_string(parameter_count(mol.hydrogen_count, n)) +
                     " parameters, got " + std::to_string(params.size()));
  }
  mol.hydrogen_coeffs.resize(mol.hydrogen_count, static_cast<Eigen::Index>(n));
  Eigen::Index pos = 0;
  mol.carbon_value = params(pos++);
  for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(n); ++r) {
    for (Eigen::Index i = 0; i < mol.hydrogen_count; ++i) {
      mol.hydrogen_coeffs(i, r) = params(pos++);
    }
  }
}

double molecule_eval(const Molecule& mol, std::span<const double> x) {
  if (x.size() != mol.n_features()) {
    throw InputError("molecule expects " + std::to_string(mol.n_features()) +
                     " features, got " + std::to_string(x.size()));
  }
  // Same term order as dot(design_row(x), parameter_vector(mol)).
  double value = mol.carbon_value;
  for (std::size_t r = 0; r < x.size(); ++r) {
    double power = 1.0;
    for (int i = 0; i < mol.hydrogen_count; ++i) {
      power *= x[r];
      value += mol.hydrogen_coeffs(i, static_cast<Eigen::Index>(r)) * power;
    }
  }
  return value;
}

}  // namespace ahn
