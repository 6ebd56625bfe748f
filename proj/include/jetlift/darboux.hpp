#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "jetlift/check.hpp"
#include "jetlift/tensors.hpp"
#include "jetlift/transform.hpp"

namespace jetlift {

/// Minimum gap between eigenvalues of the q-block.
inline constexpr double kEigenGap = 1e-8;

struct EigenData {
  std::vector<double> point;
  /// lambda_1 < ... < lambda_n of the block (R^i_j); lambda_0 = 0 belongs to dt.
  std::vector<double> eigenvalues;
  double lambda0 = 0.0;
  /// Columns are right eigenvectors v_k of the block.
  Eigen::MatrixXd right;
  /// Rows are left eigenvectors u_k with u_k v_k = 1.
  Eigen::MatrixXd left;
  double reconstruction_residual = 0.0;
};

/// Real, distinct eigenvalues of the q-block of R at a point of BaseE(n). Throws EigenError
/// for complex, clustered or defective spectra.
EigenData eigen_analysis(const Tensor11& r, std::span<const double> point);

/// lambda_k (k = 1..n, ascending) as a procedural field with gradient u_k (dA/dx) v_k.
ScalarField eigenvalue_field(const Tensor11& r, int k);

/// Q^i = lambda_i(t, q). Checks N_R, the spectrum along the sampled domain with continuity
/// tracking between neighbouring samples, and the q-Jacobian of the eigenvalues.
FibredTransform build_dn_transform(const Tensor11& r, const SampleSpec& domain,
                                   double tolerance = kSymbolicTolerance);

/// Checks in the new chart: R diagonal with each eigenvalue depending on its own coordinate,
/// the lift of R diagonal, Lambda canonical. Tolerance 1e-6.
CheckReport verify_dn(const Tensor11& r, const FibredTransform& transform, const SampleSpec& spec);

}  // namespace jetlift
