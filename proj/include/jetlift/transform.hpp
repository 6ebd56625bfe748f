#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "jetlift/tensors.hpp"

namespace jetlift {

struct JacobianTag {};
/// Entry (a, b) = d y^a / d x^b, as a field on the old chart.
using Jacobian = FieldMatrix<JacobianTag>;

inline constexpr double kNewtonTolerance = 1e-12;
inline constexpr int kNewtonMaxIterations = 100;

/// Inverse of a square matrix of fields via cofactors; entry (a, b) row-major.
/// Throws SingularJacobianError when the determinant folds to the constant zero.
std::vector<ScalarField> symbolic_inverse(std::span<const ScalarField> m, int d);

/// A change of chart y = y(x) on one space. The inverse x = x(y), when given, is written
/// with the same coordinate names read as new coordinates.
class CoordinateChange {
 public:
  CoordinateChange(Space space, std::vector<ScalarField> forward,
                   std::optional<std::vector<ScalarField>> inverse = std::nullopt);

  static CoordinateChange identity(const Space& space);

  const Space& space() const noexcept;
  const std::vector<ScalarField>& forward() const noexcept;
  bool has_inverse() const noexcept;
  const std::vector<ScalarField>& inverse() const;

  /// d y / d x on the old chart.
  const Jacobian& jacobian() const;
  /// d x / d y expressed on the old chart.
  const Jacobian& inverse_jacobian() const;

  std::vector<double> forward_point(std::span<const double> x) const;
  /// Uses the symbolic inverse when present, otherwise Newton iteration seeded at y.
  std::vector<double> inverse_point(std::span<const double> y) const;
  std::vector<double> inverse_point_newton(std::span<const double> y, std::span<const double> seed) const;
  Eigen::MatrixXd jacobian_at(std::span<const double> x) const;

  /// The change x = x(y); needs the symbolic inverse.
  CoordinateChange reversed() const;

  /// f o x(y): an old-chart field rewritten on the new chart. Substitutes symbolically when
  /// possible, otherwise wraps f in a procedural leaf that inverts the map pointwise.
  ScalarField to_new_chart(const ScalarField& f) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

enum class Direction { Forward, Backward };

// Components of an object in the new coordinate frame, still as functions of the old
// coordinates.
VectorField frame_components(const VectorField& x, const CoordinateChange& c);
OneForm frame_components(const OneForm& a, const CoordinateChange& c);
Tensor11 frame_components(const Tensor11& r, const CoordinateChange& c);
Tensor02 frame_components(const Tensor02& b, const CoordinateChange& c);
TwoForm frame_components(const TwoForm& w, const CoordinateChange& c);
Bivector frame_components(const Bivector& l, const CoordinateChange& c);
Tensor12 frame_components(const Tensor12& n, const CoordinateChange& c);

// The object in the new chart: new frame, new coordinates.
ScalarField transform(const ScalarField& f, const CoordinateChange& c, Direction d = Direction::Forward);
VectorField transform(const VectorField& x, const CoordinateChange& c, Direction d = Direction::Forward);
OneForm transform(const OneForm& a, const CoordinateChange& c, Direction d = Direction::Forward);
Tensor11 transform(const Tensor11& r, const CoordinateChange& c, Direction d = Direction::Forward);
Tensor02 transform(const Tensor02& b, const CoordinateChange& c, Direction d = Direction::Forward);
TwoForm transform(const TwoForm& w, const CoordinateChange& c, Direction d = Direction::Forward);
Bivector transform(const Bivector& l, const CoordinateChange& c, Direction d = Direction::Forward);
Tensor12 transform(const Tensor12& n, const CoordinateChange& c, Direction d = Direction::Forward);

/// (t, q) -> (t, Q(t, q)) on BaseE(n) with the induced change
/// (t, q, p) -> (t, Q, P), P_j = p_i dq^i/dQ^j, on PhaseJ(n).
class FibredTransform {
 public:
  /// `q_forward` are the Q^i as fields on BaseE(n). `q_inverse`, if given, are the q^i as
  /// fields on BaseE(n) whose coordinates are read as (t, Q).
  FibredTransform(int n, std::vector<ScalarField> q_forward,
                  std::optional<std::vector<ScalarField>> q_inverse = std::nullopt);

  int n() const noexcept { return n_; }
  const CoordinateChange& base() const noexcept { return base_; }
  const CoordinateChange& phase() const noexcept { return phase_; }

 private:
  int n_;
  CoordinateChange base_;
  CoordinateChange phase_;
};

}  // namespace jetlift
