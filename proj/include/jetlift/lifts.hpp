#pragma once

#include "jetlift/tensors.hpp"

namespace jetlift {

/// F_X = p_i X^i on PhaseJ(n). X must be vertical.
ScalarField momentum_function(const VectorField& x);

/// v(alpha) = alpha_i d/dp_i. The dt-component is dropped.
VectorField vlift_oneform(const OneForm& alpha);

/// Complete lift of a vertical or time-normalized X:
/// [d/dt] + X^i d/dq^i - p_j dX^j/dq^i d/dp_i.
VectorField complete_lift_vector(const VectorField& x);

/// v(R) = p_i R^i_j d/dp_j. Requires R(dt) = 0.
VectorField vlift_tensor11(const Tensor11& r);

/// h(R) = p_i R^i_j dq^j + p_i R^i_0 dt. Requires R(dt) = 0.
OneForm hlift_tensor11(const Tensor11& r);

/// Complete lift of R to PhaseJ(n). Requires R(dt) = 0.
Tensor11 complete_lift_tensor11(const Tensor11& r);

/// Complete lift of R to the cotangent bundle ExtendedT(n). Requires R(dt) = 0.
Tensor11 complete_lift_cotangent(const Tensor11& r);

/// v(w) = w_ij d/dp_j (x) dq^i + w_0j d/dp_j (x) dt.
Tensor11 vlift_twoform(const TwoForm& w);
/// Same formula for a general covariant 2-tensor, first slot contracted.
Tensor11 vlift_tensor02(const Tensor02& b);

/// Theta = p_i dq^i ^ dt, with the representative p_i dq^i of the class <theta>.
struct CanonicalTheta {
  TwoForm theta;
  OneForm representative;
};
CanonicalTheta canonical_theta(int n);

/// Pullback of forms on E to PhaseJ (pi*) or from PhaseJ to ExtendedT (rho*).
OneForm pullback(const OneForm& alpha, const Space& target);
TwoForm pullback(const TwoForm& w, const Space& target);

/// Pullback of a form on PhaseJ along the section p_i = alpha_i(t, q) of PhaseJ -> E.
TwoForm pullback_along_section(const TwoForm& w, const OneForm& alpha);

}  // namespace jetlift
