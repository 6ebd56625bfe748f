#pragma once

#include <string>
#include <vector>

#include "jetlift/check.hpp"
#include "jetlift/tensors.hpp"

namespace jetlift {

/// Lambda = sum_i d/dq^i ^ d/dp_i on PhaseJ(n), i.e. Lambda^{q_i p_i} = 1 = -Lambda^{p_i q_i}.
Bivector canonical_poisson(int n);

/// P(s)^b = s_a Lambda^{ab}, so that Lambda(s, b) = <P(s), b>.
VectorField poisson_apply(const Bivector& lambda, const OneForm& sigma);
VectorField poisson_apply(const OneForm& sigma);

/// {F, G} = dF/dq^i dG/dp_i - dF/dp_i dG/dq^i.
ScalarField poisson_bracket(const ScalarField& f, const ScalarField& g);

/// X_h = d/dt + dH/dp_i d/dq^i - dH/dq^i d/dp_i.
VectorField hamiltonian_vector_field(const ScalarField& h);
/// X_F = -P(dF), without the d/dt term.
VectorField fibre_hamiltonian_field(const ScalarField& f);
/// dp_i ^ dq^i - dH ^ dt.
TwoForm hamiltonian_two_form(const ScalarField& h);

/// Entries (c, b) of P o R and R o P as maps from one-forms to vectors:
/// (P R)^{cb} = R^c_a Lambda^{ab}, (R P)^{cb} = Lambda^{ca} R^b_a.
Bivector poisson_after(const Bivector& lambda, const Tensor11& r);
Bivector poisson_before(const Bivector& lambda, const Tensor11& r);

/// mu(s, Z) = (L_{P s} R)(Z) - P(L_Z(R s)) + P(L_{R Z} s).
VectorField magri_morosi(const Tensor11& r, const Bivector& lambda, const OneForm& sigma, const VectorField& z);

struct PNReport {
  double commutation_residual = 0.0;
  double magri_morosi_residual = 0.0;
  double torsion_residual = 0.0;
  double lifted_torsion_residual = 0.0;
  std::vector<double> commutation_point;
  std::vector<double> magri_morosi_point;
  std::vector<double> torsion_point;
  std::vector<double> lifted_torsion_point;
  double tolerance = kSymbolicTolerance;
  bool pn_structure = false;
  std::string verdict() const { return pn_structure ? "pn-structure" : "not-pn"; }
};

/// Runs the Poisson-Nijenhuis test for (P, complete lift of R): commutation, mu over the
/// lifted basis pairs {pi* dq^i, dF_(d/dq^j)} x {v(dq^k), lift(d/dq^l), lift(d/dt)}, N_R and
/// the torsion of the lift. Requires R(dt) = 0.
PNReport pn_check(const Tensor11& r, const SampleSpec& spec, double tolerance = kSymbolicTolerance);

}  // namespace jetlift
