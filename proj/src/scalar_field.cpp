#include "jetlift/scalar_field.hpp"

#include <numeric>
#include <vector>

#include "jetlift/errors.hpp"

namespace jetlift {

ScalarField::ScalarField(Space space, Expr expr) : space_(std::move(space)), expr_(std::move(expr)) {}

ScalarField ScalarField::parse(std::string_view source, const Space& space) {
  return ScalarField(space, parse_expression(source, space.names()));
}

ScalarField ScalarField::constant(const Space& space, double value) {
  return ScalarField(space, Expr::constant(value));
}

ScalarField ScalarField::coordinate(const Space& space, int index) {
  if (index < 0 || index >= space.dim()) {
    throw SpaceMismatchError("coordinate index out of range for " + space.to_string());
  }
  return ScalarField(space, Expr::variable(index));
}

ScalarField ScalarField::coordinate(const Space& space, std::string_view name) {
  const auto index = space.index_of(name);
  if (!index) throw SpaceMismatchError("no coordinate '" + std::string(name) + "' on " + space.to_string());
  return coordinate(space, *index);
}

ScalarField ScalarField::procedural(const Space& space, std::shared_ptr<const ProceduralFunction> fn) {
  std::vector<int> args(static_cast<std::size_t>(space.dim()));
  std::iota(args.begin(), args.end(), 0);
  return ScalarField(space, Expr::procedural(std::move(fn), std::move(args)));
}

double ScalarField::evaluate(std::span<const double> point) const {
  if (point.size() != static_cast<std::size_t>(space_.dim())) {
    throw SpaceMismatchError("point of dimension " + std::to_string(point.size()) + " on " +
                             space_.to_string());
  }
  return expr_.evaluate(point);
}

ScalarField ScalarField::derivative(int coordinate) const {
  if (coordinate < 0 || coordinate >= space_.dim()) {
    throw SpaceMismatchError("coordinate index out of range for " + space_.to_string());
  }
  return ScalarField(space_, expr_.derivative(coordinate));
}

ScalarField ScalarField::derivative(std::string_view coordinate) const {
  const auto index = space_.index_of(coordinate);
  if (!index) {
    throw SpaceMismatchError("no coordinate '" + std::string(coordinate) + "' on " + space_.to_string());
  }
  return derivative(*index);
}

ScalarField ScalarField::pulled_back_to(const Space& target) const {
  if (target == space_) return *this;
  const std::vector<int> map = pullback_map(space_, target);
  return ScalarField(target, expr_.remap(map));
}

ScalarField differentiate(const ScalarField& f, std::string_view coordinate) {
  return f.derivative(coordinate);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  require_same_space(a.space(), b.space(), "scalar addition");
  return ScalarField(a.space(), a.expr() + b.expr());
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  require_same_space(a.space(), b.space(), "scalar subtraction");
  return ScalarField(a.space(), a.expr() - b.expr());
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require_same_space(a.space(), b.space(), "scalar product");
  return ScalarField(a.space(), a.expr() * b.expr());
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  require_same_space(a.space(), b.space(), "scalar quotient");
  return ScalarField(a.space(), a.expr() / b.expr());
}

ScalarField operator-(const ScalarField& a) { return ScalarField(a.space(), -a.expr()); }

ScalarField operator*(double c, const ScalarField& a) {
  return ScalarField(a.space(), Expr::constant(c) * a.expr());
}

}  // namespace jetlift
