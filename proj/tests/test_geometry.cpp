#include <cmath>
#include <vector>

#include "doctest.h"
#include "jetlift/calculus.hpp"
#include "jetlift/errors.hpp"
#include "support.hpp"

using namespace jetlift;
using namespace support;

namespace {

const Space E1 = Space::base(1);
const Space E2 = Space::base(2);

// R = q d/dq (x) dq + t d/dq (x) dt
Tensor11 torsion_example() { return matrix(E1, {{1, 1, "q1"}, {1, 0, "t"}}); }

}  // namespace

TEST_CASE("contractions") {
  const Tensor11 r = torsion_example();
  const VectorField rt = apply(r, VectorField::basis(E1, 0));
  CHECK(rt[0].is_zero());
  CHECK(rt[1].to_string() == "t");
  const OneForm rdt = adjoint(r, OneForm::basis(E1, 0));
  CHECK(rdt[0].is_zero());
  CHECK(rdt[1].is_zero());
  CHECK(pair(VectorField::basis(E1, 1), OneForm::basis(E1, 1)).is_constant(1.0));

  const VectorField x = vec(E1, {"t*q1", "q1^2 - t"});
  const OneForm a = form(E1, {"sin(q1)", "t + 1"});
  CHECK(max_residual(E1, difference(pair(apply(r, x), a), pair(x, adjoint(r, a)))) < 1e-12);
  CHECK_THROWS_AS(apply(r, VectorField::basis(E2, 0)), SpaceMismatchError);
}

TEST_CASE("lie bracket") {
  const VectorField x = vec(E1, {"0", "q1"});
  const VectorField y = vec(E1, {"1", "t"});
  const VectorField b = lie_bracket(x, y);
  const VectorField expected = vec(E1, {"0", "-t"});
  CHECK(max_residual(E1, difference(b, expected)) < 1e-12);
  CHECK(max_residual(E1, magnitude(lie_bracket(x, x))) == 0.0);
  const Space j = Space::phase(1);
  CHECK(max_residual(j, magnitude(lie_bracket(VectorField::basis(j, 1), VectorField::basis(j, 2)))) == 0.0);
}

TEST_CASE("jacobi identity") {
  const VectorField x = vec(E2, {"q1", "t*q2", "q1^2"});
  const VectorField y = vec(E2, {"1", "q2 - t", "q1*q2"});
  const VectorField z = vec(E2, {"0", "t^2", "q1 + 3*q2^2"});
  const VectorField sum = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                          lie_bracket(z, lie_bracket(x, y));
  CHECK(max_residual(E2, magnitude(sum)) < 1e-9);
}

TEST_CASE("lie derivatives") {
  const Tensor11 r = matrix(E1, {{1, 1, "q1"}});
  const ScalarField fn = f(E1, "t*q1");
  const VectorField x = VectorField::basis(E1, 1);
  const Tensor11 lhs = lie_derivative(fn * x, r);
  const Tensor11 rhs = fn * lie_derivative(x, r) - tensor_product(x, adjoint(r, differential(fn))) +
                       tensor_product(apply(r, x), differential(fn));
  CHECK(max_residual(E1, difference(lhs, rhs)) < 1e-9);

  CHECK(lie_derivative(VectorField::basis(E1, 0), fn).to_string() == "q1");

  // (L_X R)(Y) = [X, R Y] - R [X, Y]
  const Tensor11 rr = torsion_example();
  const VectorField xx = vec(E1, {"1", "q1*t"});
  const VectorField yy = vec(E1, {"q1", "t^2"});
  CHECK(max_residual(E1, difference(apply(lie_derivative(xx, rr), yy),
                                    lie_bracket(xx, apply(rr, yy)) - apply(rr, lie_bracket(xx, yy)))) < 1e-9);
  for (const VectorField& v : {vec(E1, {"0", "q1^2"}), vec(E1, {"1", "sin(t)"})}) {
    CHECK(annihilates_dt(lie_derivative(v, rr)));
  }

  // one-form: (L_X a)(Y) = X(a(Y)) - a([X, Y])
  const OneForm a = form(E1, {"q1", "t*q1"});
  CHECK(max_residual(E1, difference(pair(yy, lie_derivative(xx, a)),
                                    directional(xx, pair(yy, a)) - pair(lie_bracket(xx, yy), a))) < 1e-9);
}

TEST_CASE("forms") {
  CHECK(max_residual(E1, magnitude(exterior_derivative(form(E1, {"q1", "t"})))) == 0.0);
  const TwoForm w = wedge(OneForm::basis(E1, 1), OneForm::basis(E1, 0));
  const OneForm i = interior_product(VectorField::basis(E1, 1), w);
  CHECK(i[0].is_constant(1.0));
  CHECK(i[1].is_zero());
  const Tensor02 h = hook2(matrix(E1, {{1, 1, "q1"}}), w);
  const std::vector<double> pt{0.3, 2.5};
  CHECK(evaluate_form(h, VectorField::basis(E1, 1), VectorField::basis(E1, 0))(pt) == doctest::Approx(2.5));
  const ScalarField g = f(E2, "sin(t*q1) + q2^3*q1");
  CHECK(max_residual(E2, magnitude(exterior_derivative(differential(g)))) < 1e-9);
}

TEST_CASE("nijenhuis torsion examples") {
  const Tensor11 r = torsion_example();
  const Tensor12 n = nijenhuis_torsion(r);
  const std::vector<double> pt{1.0, 1.0};
  const VectorField v = contract(n, VectorField::basis(E1, 0), VectorField::basis(E1, 1));
  CHECK(std::abs(v[0](pt)) < 1e-12);
  CHECK(std::abs(v[1](pt) - 1.0) < 1e-12);
  CHECK(max_residual(E1, difference(v, vec(E1, {"0", "t"}))) < 1e-12);

  CHECK(max_residual(E1, magnitude(nijenhuis_torsion(matrix(E1, {{1, 1, "q1"}})))) == 0.0);
  CHECK(max_residual(E2, magnitude(nijenhuis_torsion(matrix(E2, {{1, 1, "2"}, {1, 2, "3"}, {2, 0, "-1"}})))) == 0.0);

  // Component formula agrees with the bracket definition.
  const Tensor11 r2 = matrix(E2, {{1, 1, "q1*q2"}, {1, 2, "t"}, {2, 1, "q2^2"}, {2, 0, "sin(q1)"}});
  const VectorField x = vec(E2, {"1", "q2", "t*q1"});
  const VectorField y = vec(E2, {"q1", "0", "q2 - t^2"});
  CHECK(max_residual(E2, difference(contract(nijenhuis_torsion(r2), x, y), nijenhuis_on(r2, x, y))) < 1e-9);
}

TEST_CASE("torsion tensoriality and antisymmetry") {
  const Tensor11 r = matrix(E2, {{1, 1, "q1*q2"}, {1, 2, "t"}, {2, 1, "q2^2"}, {2, 0, "sin(q1)"}});
  const Tensor12 n = nijenhuis_torsion(r);
  const Tensor12 h = haantjes_tensor(r);
  const ScalarField g = f(E2, "exp(t)*q2 + q1");
  const VectorField x = vec(E2, {"1", "q2", "t*q1"});
  const VectorField y = vec(E2, {"q1", "0", "q2 - t^2"});
  CHECK(max_residual(E2, difference(contract(n, g * x, y), g * contract(n, x, y))) < 1e-9);
  CHECK(max_residual(E2, difference(contract(n, x, g * y), g * contract(n, x, y))) < 1e-9);
  CHECK(max_residual(E2, difference(contract(n, x, y), -contract(n, y, x))) < 1e-9);
  CHECK(max_residual(E2, difference(contract(h, g * x, y), g * contract(h, x, y))) < 1e-9);
}

TEST_CASE("interior product of the torsion") {
  const Tensor11 r = matrix(E2, {{1, 1, "q1*q2"}, {1, 2, "t"}, {2, 1, "q2^2"}, {2, 0, "sin(q1)"}});
  const Tensor12 n = nijenhuis_torsion(r);
  for (int a = 0; a < E2.dim(); ++a) {
    const VectorField x = VectorField::basis(E2, a);
    const Tensor11 rhs = lie_derivative(apply(r, x), r) - compose(r, lie_derivative(x, r));
    CHECK(max_residual(E2, difference(interior_product(x, n), rhs)) < 1e-9);
  }
}

TEST_CASE("haantjes tensor") {
  const Tensor11 r = torsion_example();
  CHECK(max_residual(E1, magnitude(nijenhuis_torsion(r))) > 0.1);
  CHECK(max_residual(E1, magnitude(haantjes_tensor(r))) < 1e-9);
  CHECK(max_residual(E1, magnitude(haantjes_tensor(matrix(E1, {{1, 1, "q1"}})))) == 0.0);
  CHECK(max_residual(E2, magnitude(haantjes_tensor(matrix(E2, {{1, 1, "2"}, {2, 1, "5"}})))) == 0.0);

  // H(X, Y) = R^2 N(X,Y) + N(RX,RY) - R N(RX,Y) - R N(X,RY) straight from contractions.
  const Tensor11 r2 = matrix(E2, {{1, 1, "q1*q2"}, {1, 2, "t"}, {2, 1, "q2^2"}, {2, 0, "sin(q1)"}});
  const Tensor12 n = nijenhuis_torsion(r2);
  const VectorField x = vec(E2, {"1", "q2", "t*q1"});
  const VectorField y = vec(E2, {"q1", "0", "q2 - t^2"});
  const VectorField rx = apply(r2, x);
  const VectorField ry = apply(r2, y);
  const VectorField expected = apply(compose(r2, r2), contract(n, x, y)) + contract(n, rx, ry) -
                               apply(r2, contract(n, rx, y)) - apply(r2, contract(n, x, ry));
  CHECK(max_residual(E2, difference(contract(haantjes_tensor(r2), x, y), expected)) < 1e-9);
}
