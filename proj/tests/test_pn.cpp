#include <cmath>
#include <vector>

#include "doctest.h"
#include "jetlift/calculus.hpp"
#include "jetlift/errors.hpp"
#include "jetlift/lifts.hpp"
#include "jetlift/pn.hpp"
#include "support.hpp"

using namespace jetlift;
using namespace support;

namespace {

const Space E1 = Space::base(1);
const Space E2 = Space::base(2);
const Space J1 = Space::phase(1);
const Space J2 = Space::phase(2);

Tensor11 diag_r() { return matrix(E1, {{1, 1, "q1"}}); }
Tensor11 torsion_r() { return matrix(E1, {{1, 1, "q1"}, {1, 0, "t"}}); }
Tensor11 general_r() { return matrix(E2, {{1, 1, "q1*q2"}, {1, 2, "t"}, {2, 1, "q2^2"}, {1, 0, "sin(q1)"}, {2, 0, "t*q2"}}); }

/// Applies R - lambda to a vector field.
VectorField shifted(const Tensor11& r, const ScalarField& lambda, const VectorField& x) {
  return apply(r, x) - lambda * x;
}

}  // namespace

TEST_CASE("poisson map on the lifted basis") {
  const Bivector lambda = canonical_poisson(1);
  CHECK(lambda(1, 2).is_constant(1.0));
  CHECK(lambda(2, 1).is_constant(-1.0));
  const OneForm tdq = form(E1, {"0", "t"});
  CHECK(max_residual(J1, difference(poisson_apply(pullback(tdq, J1)), vec(J1, {"0", "0", "t"}))) == 0.0);
  CHECK(max_residual(J1, difference(poisson_apply(pullback(tdq, J1)), vlift_oneform(tdq))) == 0.0);

  const VectorField x = vec(E1, {"0", "q1"});
  const VectorField px = poisson_apply(differential(momentum_function(x)));
  CHECK(max_residual(J1, difference(px, vec(J1, {"0", "-q1", "p1"}))) < 1e-12);
  CHECK(max_residual(J1, difference(px, -complete_lift_vector(x))) < 1e-12);

  for (const auto& r : {torsion_r(), diag_r()}) {
    CHECK(max_residual(J1, difference(poisson_apply(hlift_tensor11(r)), vlift_tensor11(r))) < 1e-12);
  }
  const Tensor11 g = general_r();
  CHECK(max_residual(J2, difference(poisson_apply(hlift_tensor11(g)), vlift_tensor11(g))) < 1e-12);
  const VectorField y = vec(E2, {"0", "q2*t", "q1^2"});
  CHECK(max_residual(J2, difference(poisson_apply(differential(momentum_function(y))), -complete_lift_vector(y))) <
        1e-12);
}

TEST_CASE("canonical bracket") {
  const Space& j = J2;
  for (int i = 1; i <= 2; ++i) {
    for (int k = 1; k <= 2; ++k) {
      const ScalarField b = poisson_bracket(ScalarField::coordinate(j, j.q(i)), ScalarField::coordinate(j, j.p(k)));
      CHECK(b.is_constant(i == k ? 1.0 : 0.0));
    }
  }
  const ScalarField f1 = f(j, "p1*q2^2 + t*q1");
  const ScalarField f2 = f(j, "q1*p2 - p1^2");
  const ScalarField f3 = f(j, "q1*q2*p1 + p2^3");
  const ScalarField jacobi = poisson_bracket(f1, poisson_bracket(f2, f3)) + poisson_bracket(f2, poisson_bracket(f3, f1)) +
                             poisson_bracket(f3, poisson_bracket(f1, f2));
  CHECK(max_residual(j, [&](auto x) { return std::abs(jacobi(x)); }) < 1e-9);
  // {F, G} = <P(dF), dG>
  CHECK(max_residual(j, difference(poisson_bracket(f1, f2), pair(poisson_apply(differential(f1)), differential(f2)))) <
        1e-12);
}

TEST_CASE("hamiltonian vector fields") {
  const ScalarField h = f(J1, "p1^2/2 + q1");
  CHECK(max_residual(J1, difference(hamiltonian_vector_field(h), vec(J1, {"1", "p1", "-1"}))) < 1e-12);
  CHECK(max_residual(J1, difference(hamiltonian_vector_field(f(J1, "4")), vec(J1, {"1", "0", "0"}))) == 0.0);

  const ScalarField h2 = f(J1, "p1^2/2 + t*q1");
  const VectorField xh = hamiltonian_vector_field(h2);
  CHECK(max_residual(J1, magnitude(interior_product(xh, hamiltonian_two_form(h2)))) < 1e-12);
  CHECK(max_residual(J1, [&](auto x) { return std::abs(pair(xh, OneForm::basis(J1, 0))(x) - 1.0); }) == 0.0);
  // The fibre part is -P(dH).
  CHECK(max_residual(J1, difference(fibre_hamiltonian_field(h2), vec(J1, {"0", "p1", "-t"}))) < 1e-12);
}

TEST_CASE("commutation of P with the lifted tensor") {
  for (const auto& r : {diag_r(), torsion_r(), matrix(E1, {{1, 1, "t*q1^2 + 1"}, {1, 0, "sin(q1)"}})}) {
    const Tensor11 rt = complete_lift_tensor11(r);
    const Bivector lambda = canonical_poisson(1);
    CHECK(max_residual(J1, difference(poisson_after(lambda, rt), poisson_before(lambda, rt))) < 1e-9);
  }
  const Tensor11 rt = complete_lift_tensor11(general_r());
  const Bivector lambda = canonical_poisson(2);
  CHECK(max_residual(J2, difference(poisson_after(lambda, rt), poisson_before(lambda, rt))) < 1e-9);
}

TEST_CASE("magri-morosi concomitant") {
  const Bivector lambda = canonical_poisson(1);
  const OneForm dq = form(E1, {"0", "1"});
  const VectorField vdq = vlift_oneform(dq);
  const OneForm pdq = pullback(dq, J1);
  CHECK(max_residual(J1, magnitude(magri_morosi(complete_lift_tensor11(diag_r()), lambda, pdq, vdq))) < 1e-9);
  CHECK(max_residual(J1, magnitude(magri_morosi(Tensor11::zero(J1), lambda, pdq, vdq))) == 0.0);

  const Tensor11 rt = complete_lift_tensor11(torsion_r());
  const std::vector<OneForm> sigmas{pdq, pullback(form(E1, {"q1", "t^2"}), J1),
                                    differential(momentum_function(vec(E1, {"0", "q1*t"})))};
  const std::vector<VectorField> zs{vdq, vlift_oneform(form(E1, {"0", "sin(t)"})), complete_lift_vector(vec(E1, {"1", "q1"})),
                                    complete_lift_vector(vec(E1, {"0", "q1^2"}))};
  for (const auto& s : sigmas) {
    for (const auto& z : zs) CHECK(max_residual(J1, magnitude(magri_morosi(rt, lambda, s, z))) < 1e-9);
  }
}

TEST_CASE("poisson-nijenhuis verdicts") {
  SampleSpec spec;
  const PNReport diag = pn_check(diag_r(), spec);
  CHECK(diag.pn_structure);
  CHECK(diag.verdict() == "pn-structure");
  CHECK(diag.torsion_residual < 1e-9);
  CHECK(diag.lifted_torsion_residual < 1e-9);
  CHECK(diag.magri_morosi_residual < 1e-9);
  CHECK(diag.commutation_residual < 1e-9);

  const PNReport tor = pn_check(torsion_r(), spec);
  CHECK_FALSE(tor.pn_structure);
  CHECK(tor.verdict() == "not-pn");
  CHECK(tor.torsion_residual > 1e-3);
  CHECK(tor.lifted_torsion_residual > 1e-3);
  CHECK(tor.magri_morosi_residual < 1e-9);
  CHECK(tor.commutation_residual < 1e-9);

  CHECK(pn_check(Tensor11::zero(E1), spec).pn_structure);
  CHECK_THROWS_AS(pn_check(matrix(E1, {{0, 1, "1"}}), spec), PreconditionError);
}

TEST_CASE("torsion on commuting eigenfields") {
  const ScalarField l1 = f(E2, "q1 + q2^2");
  const ScalarField l2 = f(E2, "q1*q2 + t");
  Tensor11 r = Tensor11::zero(E2);
  r.set(1, 1, l1);
  r.set(2, 2, l2);
  const VectorField x1 = VectorField::basis(E2, 1);
  const VectorField x2 = VectorField::basis(E2, 2);
  const VectorField expected = (l1 - l2) * (directional(x1, l2) * x2 + directional(x2, l1) * x1);
  CHECK(max_residual(E2, difference(contract(nijenhuis_torsion(r), x1, x2), expected)) < 1e-9);
}

TEST_CASE("haantjes tensor on eigenfields") {
  // Eigenfields X1 = d/dq1, X2 = q1 d/dq1 + d/dq2 with [X1, X2] = X1, dual coframe dq1 - q1 dq2, dq2.
  const ScalarField l1 = f(E2, "q2 + t");
  const ScalarField l2 = f(E2, "q1^2 + 3");
  Tensor11 r = Tensor11::zero(E2);
  r.set(1, 1, l1);
  r.set(1, 2, f(E2, "q1") * (l2 - l1));
  r.set(2, 2, l2);
  const VectorField x1 = vec(E2, {"0", "1", "0"});
  const VectorField x2 = vec(E2, {"0", "q1", "1"});
  CHECK(max_residual(E2, difference(apply(r, x1), l1 * x1)) < 1e-12);
  CHECK(max_residual(E2, difference(apply(r, x2), l2 * x2)) < 1e-12);

  const VectorField b = lie_bracket(x1, x2);
  const VectorField rhs = shifted(r, l1, shifted(r, l1, shifted(r, l2, shifted(r, l2, b))));
  CHECK(max_residual(E2, difference(contract(haantjes_tensor(r), x1, x2), rhs)) < 1e-9);
}
