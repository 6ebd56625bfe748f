#include "jetlift/pn.hpp"

#include <algorithm>

#include "jetlift/calculus.hpp"
#include "jetlift/errors.hpp"
#include "jetlift/lifts.hpp"

namespace jetlift {

Bivector canonical_poisson(int n) {
  const Space j = Space::phase(n);
  Bivector l = Bivector::zero(j);
  for (int i = 1; i <= n; ++i) {
    l.set(j.q(i), j.p(i), ScalarField::constant(j, 1.0));
    l.set(j.p(i), j.q(i), ScalarField::constant(j, -1.0));
  }
  return l;
}

VectorField poisson_apply(const Bivector& lambda, const OneForm& sigma) {
  require_same_space(lambda.space(), sigma.space(), "Poisson map");
  const int d = lambda.dim();
  std::vector<ScalarField> out;
  for (int b = 0; b < d; ++b) {
    ScalarField acc = ScalarField::constant(lambda.space(), 0.0);
    for (int a = 0; a < d; ++a) {
      if (!lambda(a, b).is_zero() && !sigma[a].is_zero()) acc = acc + sigma[a] * lambda(a, b);
    }
    out.push_back(acc);
  }
  return VectorField(lambda.space(), std::move(out));
}

VectorField poisson_apply(const OneForm& sigma) {
  if (sigma.space().kind() != SpaceKind::PhaseJ) throw SpaceMismatchError("canonical Poisson map lives on PhaseJ");
  return poisson_apply(canonical_poisson(sigma.space().n()), sigma);
}

ScalarField poisson_bracket(const ScalarField& f, const ScalarField& g) {
  require_same_space(f.space(), g.space(), "Poisson bracket");
  const Space& j = f.space();
  if (j.kind() != SpaceKind::PhaseJ) throw SpaceMismatchError("Poisson bracket lives on PhaseJ");
  ScalarField acc = ScalarField::constant(j, 0.0);
  for (int i = 1; i <= j.n(); ++i) {
    acc = acc + f.derivative(j.q(i)) * g.derivative(j.p(i)) - f.derivative(j.p(i)) * g.derivative(j.q(i));
  }
  return acc;
}

VectorField fibre_hamiltonian_field(const ScalarField& f) { return -poisson_apply(differential(f)); }

VectorField hamiltonian_vector_field(const ScalarField& h) {
  const VectorField xf = fibre_hamiltonian_field(h);
  std::vector<ScalarField> c = xf.components();
  c[0] = ScalarField::constant(h.space(), 1.0);
  return VectorField(h.space(), std::move(c));
}

TwoForm hamiltonian_two_form(const ScalarField& h) {
  const Space& j = h.space();
  if (j.kind() != SpaceKind::PhaseJ) throw SpaceMismatchError("Hamiltonian two-form lives on PhaseJ");
  TwoForm w = TwoForm::zero(j);
  for (int i = 1; i <= j.n(); ++i) {
    w = w + wedge(OneForm::basis(j, j.p(i)), OneForm::basis(j, j.q(i)));
  }
  return w - wedge(differential(h), OneForm::basis(j, Space::t()));
}

Bivector poisson_after(const Bivector& lambda, const Tensor11& r) {
  require_same_space(lambda.space(), r.space(), "commutation");
  const int d = r.dim();
  Bivector out = Bivector::zero(r.space());
  for (int c = 0; c < d; ++c) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = ScalarField::constant(r.space(), 0.0);
      for (int a = 0; a < d; ++a) {
        if (!r(c, a).is_zero() && !lambda(a, b).is_zero()) acc = acc + r(c, a) * lambda(a, b);
      }
      out.set(c, b, acc);
    }
  }
  return out;
}

Bivector poisson_before(const Bivector& lambda, const Tensor11& r) {
  require_same_space(lambda.space(), r.space(), "commutation");
  const int d = r.dim();
  Bivector out = Bivector::zero(r.space());
  for (int c = 0; c < d; ++c) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = ScalarField::constant(r.space(), 0.0);
      for (int a = 0; a < d; ++a) {
        if (!lambda(c, a).is_zero() && !r(b, a).is_zero()) acc = acc + lambda(c, a) * r(b, a);
      }
      out.set(c, b, acc);
    }
  }
  return out;
}

VectorField magri_morosi(const Tensor11& r, const Bivector& lambda, const OneForm& sigma, const VectorField& z) {
  const VectorField first = apply(lie_derivative(poisson_apply(lambda, sigma), r), z);
  const VectorField second = poisson_apply(lambda, lie_derivative(z, adjoint(r, sigma)));
  const VectorField third = poisson_apply(lambda, lie_derivative(apply(r, z), sigma));
  return first - second + third;
}

PNReport pn_check(const Tensor11& r, const SampleSpec& spec, double tolerance) {
  if (!annihilates_dt(r)) throw PreconditionError("pn_check requires R(dt) = 0");
  const Space& e = r.space();
  const int n = e.n();
  const Space j = Space::phase(n);
  const Tensor11 rt = complete_lift_tensor11(r);
  const Bivector lambda = canonical_poisson(n);

  PNReport report;
  report.tolerance = tolerance;
  const SampleResult comm = sample_max(j, spec, difference(poisson_after(lambda, rt), poisson_before(lambda, rt)));
  report.commutation_residual = comm.max_residual;
  report.commutation_point = comm.worst_point;

  std::vector<OneForm> sigmas;
  std::vector<VectorField> zs;
  for (int i = 1; i <= n; ++i) {
    sigmas.push_back(pullback(OneForm::basis(e, e.q(i)), j));
    sigmas.push_back(differential(momentum_function(VectorField::basis(e, e.q(i)))));
    zs.push_back(vlift_oneform(OneForm::basis(e, e.q(i))));
    zs.push_back(complete_lift_vector(VectorField::basis(e, e.q(i))));
  }
  zs.push_back(complete_lift_vector(VectorField::basis(e, Space::t())));
  std::vector<ResidualFn> mu;
  for (const auto& s : sigmas) {
    for (const auto& z : zs) mu.push_back(magnitude(magri_morosi(rt, lambda, s, z)));
  }
  const SampleResult m = sample_max(j, spec, max_of(std::move(mu)));
  report.magri_morosi_residual = m.max_residual;
  report.magri_morosi_point = m.worst_point;
  const SampleResult nr = sample_max(e, spec, magnitude(nijenhuis_torsion(r)));
  report.torsion_residual = nr.max_residual;
  report.torsion_point = nr.worst_point;
  const SampleResult nt = sample_max(j, spec, magnitude(nijenhuis_torsion(rt)));
  report.lifted_torsion_residual = nt.max_residual;
  report.lifted_torsion_point = nt.worst_point;
  report.pn_structure = report.commutation_residual < tolerance && report.magri_morosi_residual < tolerance &&
                        report.torsion_residual < tolerance && report.lifted_torsion_residual < tolerance;
  return report;
}

}  // namespace jetlift
