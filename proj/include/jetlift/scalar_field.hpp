#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "jetlift/expr.hpp"
#include "jetlift/space.hpp"

namespace jetlift {

/// A smooth function on the chart of a space. The backend is symbolic unless the
/// expression contains procedural leaves; symbolic fields differentiate exactly to any
/// order, procedural ones up to order 2.
class ScalarField {
 public:
  ScalarField(Space space, Expr expr);

  static ScalarField parse(std::string_view source, const Space& space);
  static ScalarField constant(const Space& space, double value);
  static ScalarField coordinate(const Space& space, int index);
  static ScalarField coordinate(const Space& space, std::string_view name);
  /// A procedural leaf whose inputs are all coordinates of `space`, in order.
  static ScalarField procedural(const Space& space, std::shared_ptr<const ProceduralFunction> fn);

  const Space& space() const noexcept { return space_; }
  const Expr& expr() const noexcept { return expr_; }
  bool is_symbolic() const noexcept { return !expr_.contains_procedural(); }
  bool is_zero() const noexcept { return expr_.is_zero(); }
  bool is_constant(double value) const noexcept { return expr_.is_constant(value); }

  /// Throws SpaceMismatchError for a point of the wrong dimension; SingularPointError or
  /// DomainError when the point is outside the field's domain.
  double evaluate(std::span<const double> point) const;
  double operator()(std::span<const double> point) const { return evaluate(point); }

  ScalarField derivative(int coordinate) const;
  ScalarField derivative(std::string_view coordinate) const;

  /// Pullback along the natural projection from `target` onto this field's space.
  ScalarField pulled_back_to(const Space& target) const;

  std::string to_string() const { return expr_.to_string(space_.names()); }

 private:
  Space space_;
  Expr expr_;
};

ScalarField differentiate(const ScalarField& f, std::string_view coordinate);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(double c, const ScalarField& a);

}  // namespace jetlift
