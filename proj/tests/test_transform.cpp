#include <cmath>
#include <vector>

#include "doctest.h"
#include "jetlift/calculus.hpp"
#include "jetlift/errors.hpp"
#include "jetlift/lifts.hpp"
#include "jetlift/transform.hpp"
#include "support.hpp"

using namespace jetlift;
using namespace support;

namespace {

const Space E1 = Space::base(1);
const Space E2 = Space::base(2);
const Space J1 = Space::phase(1);

FibredTransform exp_scaling(bool with_inverse) {
  std::optional<std::vector<ScalarField>> inv;
  if (with_inverse) inv = std::vector<ScalarField>{f(E1, "exp(-t)*q1")};
  return FibredTransform(1, {f(E1, "exp(t)*q1")}, inv);
}

}  // namespace

TEST_CASE("symbolic inverse of a matrix") {
  const std::vector<ScalarField> m{f(E1, "2"), f(E1, "q1"), f(E1, "t"), f(E1, "3")};
  const auto inv = symbolic_inverse(m, 2);
  const std::vector<double> x{0.5, 1.5};
  const double det = 6.0 - 1.5 * 0.5;
  CHECK(inv[0](x) == doctest::Approx(3.0 / det));
  CHECK(inv[1](x) == doctest::Approx(-1.5 / det));
  CHECK(inv[2](x) == doctest::Approx(-0.5 / det));
  CHECK(inv[3](x) == doctest::Approx(2.0 / det));
  CHECK_THROWS_AS(symbolic_inverse(std::vector<ScalarField>{f(E1, "q1"), f(E1, "q1"), f(E1, "q1"), f(E1, "q1")}, 2),
                  SingularJacobianError);
}

TEST_CASE("exponential scaling pushes d/dq to exp(t) d/dQ") {
  const FibredTransform tr = exp_scaling(true);
  const VectorField v = transform(VectorField::basis(E1, 1), tr.base());
  CHECK(max_residual(E1, difference(v, vec(E1, {"0", "exp(t)"}))) < 1e-12);
  // P = p exp(-t)
  const std::vector<double> z{0.7, 1.3, -0.4};
  const auto y = tr.phase().forward_point(z);
  CHECK(y[2] == doctest::Approx(-0.4 * std::exp(-0.7)));
  CHECK(y[1] == doctest::Approx(1.3 * std::exp(0.7)));
  // F_(d/dq) = p = P exp(t) is invariant
  const ScalarField fx = momentum_function(VectorField::basis(E1, 1));
  const ScalarField moved = transform(fx, tr.phase());
  CHECK(max_residual(J1, difference(moved, f(J1, "p1*exp(t)"))) < 1e-12);
  CHECK(max_residual(J1, difference(moved, momentum_function(v))) < 1e-12);
}

TEST_CASE("theta keeps its form") {
  for (const auto& tr : {exp_scaling(true), FibredTransform(1, {f(E1, "q1 + t^2")}, std::vector{f(E1, "q1 - t^2")})}) {
    const TwoForm theta = canonical_theta(1).theta;
    CHECK(max_residual(J1, difference(transform(theta, tr.phase()), theta)) < 1e-12);
  }
}

TEST_CASE("identity transform leaves objects unchanged") {
  const FibredTransform id(2, {f(E2, "q1"), f(E2, "q2")}, std::vector{f(E2, "q1"), f(E2, "q2")});
  const Tensor11 r = matrix(E2, {{1, 1, "q1*t"}, {2, 1, "q2"}, {1, 0, "sin(q2)"}});
  CHECK(max_residual(E2, difference(transform(r, id.base()), r)) == 0.0);
  const Space j = Space::phase(2);
  const VectorField x = vec(j, {"1", "p1", "q2*p2", "t", "q1"});
  CHECK(max_residual(j, difference(transform(x, id.phase()), x)) == 0.0);
}

TEST_CASE("newton inverse agrees with the symbolic inverse") {
  const FibredTransform sym = exp_scaling(true);
  const FibredTransform num = exp_scaling(false);
  CHECK_FALSE(num.phase().has_inverse());
  const std::vector<double> y{0.4, -1.2, 0.9};
  const auto a = sym.phase().inverse_point(y);
  const auto b = num.phase().inverse_point(y);
  for (std::size_t k = 0; k < y.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);

  const OneForm alpha = form(E1, {"q1*t", "q1^2"});
  const OneForm s = transform(alpha, sym.base());
  const OneForm n = transform(alpha, num.base());
  CHECK(s[1].is_symbolic());
  CHECK_FALSE(n[1].is_symbolic());
  CHECK(max_residual(E1, difference(s, n)) < 1e-9);
  CHECK(max_residual(E1, difference(differential(s[1]), differential(n[1]))) < 1e-6);
}

TEST_CASE("singular jacobian and newton failure") {
  const CoordinateChange c(E1, {f(E1, "t"), f(E1, "q1^3")});
  CHECK_THROWS_AS(c.inverse_point_newton(std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 0.0}),
                  SingularJacobianError);
  const CoordinateChange wrap(E1, {f(E1, "t"), f(E1, "sin(q1) + 2")});
  CHECK_THROWS((void)wrap.inverse_point(std::vector<double>{0.0, 5.0}));
}

TEST_CASE("transform commutes with the bracket") {
  const FibredTransform tr(2, {f(E2, "q1 - t*q2"), f(E2, "q2")}, std::vector{f(E2, "q1 + t*q2"), f(E2, "q2")});
  const VectorField x = vec(E2, {"1", "q2*q1", "t"});
  const VectorField y = vec(E2, {"0", "q1^2", "q2 - t"});
  const VectorField lhs = transform(lie_bracket(x, y), tr.base());
  const VectorField rhs = lie_bracket(transform(x, tr.base()), transform(y, tr.base()));
  CHECK(max_residual(E2, difference(lhs, rhs)) < 1e-9);

  const Tensor11 r = matrix(E2, {{1, 1, "q1*q2"}, {1, 2, "t"}, {2, 1, "q2^2"}, {2, 0, "sin(q1)"}});
  CHECK(max_residual(E2, difference(transform(nijenhuis_torsion(r), tr.base()),
                                    nijenhuis_torsion(transform(r, tr.base())))) < 1e-9);
  CHECK(max_residual(E2, difference(transform(transform(r, tr.base()), tr.base(), Direction::Backward), r)) < 1e-9);
}
