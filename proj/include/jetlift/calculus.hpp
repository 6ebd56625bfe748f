#pragma once

#include "jetlift/tensors.hpp"

namespace jetlift {

// Contractions ----------------------------------------------------------------

/// (R X)^a = R^a_b X^b
VectorField apply(const Tensor11& r, const VectorField& x);
/// Transpose action on forms: (R a)_b = a_a R^a_b, so that <R X, a> = <X, R a>.
OneForm adjoint(const Tensor11& r, const OneForm& alpha);
ScalarField pair(const VectorField& x, const OneForm& alpha);
/// Composition as maps on vectors: (A o B)(X) = A(B(X)).
Tensor11 compose(const Tensor11& a, const Tensor11& b);
Tensor11 tensor_product(const VectorField& x, const OneForm& alpha);
Tensor11 identity_tensor(const Space& space);

/// B(X, Y) for a covariant 2-tensor.
ScalarField evaluate_form(const Tensor02& b, const VectorField& x, const VectorField& y);
ScalarField evaluate_form(const TwoForm& w, const VectorField& x, const VectorField& y);

// Derivations -----------------------------------------------------------------

ScalarField directional(const VectorField& x, const ScalarField& f);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

ScalarField lie_derivative(const VectorField& x, const ScalarField& f);
VectorField lie_derivative(const VectorField& x, const VectorField& y);
OneForm lie_derivative(const VectorField& x, const OneForm& alpha);
Tensor11 lie_derivative(const VectorField& x, const Tensor11& r);
Tensor02 lie_derivative(const VectorField& x, const Tensor02& b);
TwoForm lie_derivative(const VectorField& x, const TwoForm& w);

// Forms -------------------------------------------------------------------------

/// df
OneForm differential(const ScalarField& f);
/// (d a)_ab = d_a a_b - d_b a_a
TwoForm exterior_derivative(const OneForm& alpha);
/// (a ^ b)_ab = a_a b_b - a_b b_a
TwoForm wedge(const OneForm& alpha, const OneForm& beta);
/// (i_X w)_b = X^a w_ab (first slot).
OneForm interior_product(const VectorField& x, const TwoForm& w);
OneForm interior_product(const VectorField& x, const Tensor02& b);
/// (R hook2 w)(X, Y) = w(R X, Y). Not antisymmetric in general, hence a Tensor02.
Tensor02 hook2(const Tensor11& r, const TwoForm& w);

// Torsions ------------------------------------------------------------------------

/// N_R in components: N^a_bc = R^d_b d_d R^a_c - R^d_c d_d R^a_b - R^a_d (d_b R^d_c - d_c R^d_b).
Tensor12 nijenhuis_torsion(const Tensor11& r);
/// N_R(X, Y) = [RX, RY] + R^2[X, Y] - R[RX, Y] - R[X, RY], straight from brackets.
VectorField nijenhuis_on(const Tensor11& r, const VectorField& x, const VectorField& y);
/// H_R = R^2 N_R(X,Y) + N_R(RX,RY) - R N_R(RX,Y) - R N_R(X,RY), in components.
Tensor12 haantjes_tensor(const Tensor11& r);

/// N(X, Y)^a = N^a_bc X^b Y^c
VectorField contract(const Tensor12& n, const VectorField& x, const VectorField& y);
/// (i_X N)^a_c = X^b N^a_bc, so that (i_X N)(Y) = N(X, Y).
Tensor11 interior_product(const VectorField& x, const Tensor12& n);
/// (R N)^a_bc = R^a_d N^d_bc
Tensor12 apply(const Tensor11& r, const Tensor12& n);

}  // namespace jetlift
