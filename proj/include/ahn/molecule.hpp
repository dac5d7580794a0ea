#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>

namespace ahn {

inline constexpr int kMinHydrogens = 1;
inline constexpr int kMaxHydrogens = 4;

/// One CH_k unit of a compound: a local polynomial
///
///   phi(x) = carbon_value + sum_r sum_{i=1..k} H[i-1][r] * x_r^i
///
/// owning the region of input space closest to its center.
struct Molecule {
  int hydrogen_count = 0;
  double carbon_value = 0.0;
  /// k x n; row i holds the coefficients of x_r^(i+1).
  Eigen::MatrixXd hydrogen_coeffs;
  Eigen::VectorXd center;

  std::size_t n_features() const noexcept { return static_cast<std::size_t>(center.size()); }

  /// Throws InputError if k is outside 1..4, shapes disagree or a value is non-finite.
  void validate() const;

  /// A molecule with all-zero parameters centered at `center`.
  static Molecule zeros(int hydrogen_count, Eigen::VectorXd center);
};

/// Number of entries in a design row / parameter vector: 1 + k * n.
std::size_t parameter_count(int hydrogen_count, std::size_t n_features);

/// [1, x_1, x_1^2, .., x_1^k, x_2, .., x_n^k]. Throws InputError on bad k or non-finite x.
Eigen::VectorXd design_row(std::span<const double> x, int hydrogen_count);

/// Writes the design row into `out` (size 1 + k*n) without validation.
void fill_design_row(std::span<const double> x, int hydrogen_count, std::span<double> out);

/// Parameters in design-row order: [sigma, H[0][0], .., H[k-1][0], H[0][1], ..].
Eigen::VectorXd parameter_vector(const Molecule& mol);

/// Inverse of parameter_vector. `params` must have 1 + k*n entries.
void assign_parameters(Molecule& mol, const Eigen::VectorXd& params);

/// Throws InputError naming the expected width when x.size() != n.
double molecule_eval(const Molecule& mol, std::span<const double> x);

}  // namespace ahn
