#include "jetlift/lifts.hpp"

#include "jetlift/errors.hpp"

namespace jetlift {

namespace {

void require_base(const Space& s, const char* what) {
  if (s.kind() != SpaceKind::BaseE) throw SpaceMismatchError(std::string(what) + " expects an object on BaseE");
}

void require_dt_free(const Tensor11& r, const char* what) {
  require_base(r.space(), what);
  if (!annihilates_dt(r)) throw PreconditionError(std::string(what) + " requires R(dt) = 0");
}

ScalarField momentum(const Space& j, int i) { return ScalarField::coordinate(j, j.p(i)); }

}  // namespace

ScalarField momentum_function(const VectorField& x) {
  require_base(x.space(), "momentum_function");
  if (!is_vertical(x)) throw PreconditionError("momentum_function requires a vertical vector field");
  const int n = x.space().n();
  const Space j = Space::phase(n);
  ScalarField f = ScalarField::constant(j, 0.0);
  for (int i = 1; i <= n; ++i) f = f + momentum(j, i) * x[i].pulled_back_to(j);
  return f;
}

VectorField vlift_oneform(const OneForm& alpha) {
  require_base(alpha.space(), "vlift_oneform");
  const int n = alpha.space().n();
  const Space j = Space::phase(n);
  VectorField out = VectorField::zero(j);
  std::vector<ScalarField> c = out.components();
  for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(j.p(i))] = alpha[i].pulled_back_to(j);
  return VectorField(j, std::move(c));
}

VectorField complete_lift_vector(const VectorField& x) {
  require_base(x.space(), "complete_lift_vector");
  const bool vertical = is_vertical(x);
  if (!vertical && !is_time_normalized(x)) {
    throw PreconditionError("complete lift requires <X, dt> identically 0 or 1");
  }
  const Space& e = x.space();
  const int n = e.n();
  const Space j = Space::phase(n);
  std::vector<ScalarField> c(static_cast<std::size_t>(j.dim()), ScalarField::constant(j, 0.0));
  c[0] = ScalarField::constant(j, vertical ? 0.0 : 1.0);
  for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(j.q(i))] = x[i].pulled_back_to(j);
  for (int i = 1; i <= n; ++i) {
    ScalarField acc = ScalarField::constant(j, 0.0);
    for (int jj = 1; jj <= n; ++jj) {
      const ScalarField dx = x[jj].derivative(e.q(i));
      if (!dx.is_zero()) acc = acc + momentum(j, jj) * dx.pulled_back_to(j);
    }
    c[static_cast<std::size_t>(j.p(i))] = -acc;
  }
  return VectorField(j, std::move(c));
}

VectorField vlift_tensor11(const Tensor11& r) {
  require_dt_free(r, "vlift_tensor11");
  const int n = r.space().n();
  const Space j = Space::phase(n);
  std::vector<ScalarField> c(static_cast<std::size_t>(j.dim()), ScalarField::constant(j, 0.0));
  for (int jj = 1; jj <= n; ++jj) {
    ScalarField acc = ScalarField::constant(j, 0.0);
    for (int i = 1; i <= n; ++i) acc = acc + momentum(j, i) * r(i, jj).pulled_back_to(j);
    c[static_cast<std::size_t>(j.p(jj))] = acc;
  }
  return VectorField(j, std::move(c));
}

OneForm hlift_tensor11(const Tensor11& r) {
  require_dt_free(r, "hlift_tensor11");
  const int n = r.space().n();
  const Space j = Space::phase(n);
  std::vector<ScalarField> c(static_cast<std::size_t>(j.dim()), ScalarField::constant(j, 0.0));
  for (int b = 0; b <= n; ++b) {
    ScalarField acc = ScalarField::constant(j, 0.0);
    for (int i = 1; i <= n; ++i) acc = acc + momentum(j, i) * r(i, b).pulled_back_to(j);
    c[static_cast<std::size_t>(b)] = acc;
  }
  return OneForm(j, std::move(c));
}

namespace {

// Shared blocks of the complete lifts to PhaseJ and ExtendedT; `s` fixes the p indices.
Tensor11 complete_lift_on(const Tensor11& r, const Space& s) {
  const Space& e = r.space();
  const int n = e.n();
  Tensor11 out = Tensor11::zero(s);
  auto lift = [&](const ScalarField& f) { return f.pulled_back_to(s); };
  auto p = [&](int i) { return ScalarField::coordinate(s, s.p(i)); };
  for (int i = 1; i <= n; ++i) {
    for (int jj = 1; jj <= n; ++jj) {
      out.set(s.q(i), s.q(jj), lift(r(i, jj)));
      out.set(s.p(jj), s.p(i), lift(r(i, jj)));
    }
    out.set(s.q(i), Space::t(), lift(r(i, 0)));
  }
  for (int jj = 1; jj <= n; ++jj) {
    for (int k = 1; k <= n; ++k) {
      ScalarField acc = ScalarField::constant(s, 0.0);
      for (int i = 1; i <= n; ++i) {
        const ScalarField c = r(i, jj).derivative(e.q(k)) - r(i, k).derivative(e.q(jj));
        if (!c.is_zero()) acc = acc + p(i) * lift(c);
      }
      out.set(s.p(jj), s.q(k), acc);
    }
  }
  for (int k = 1; k <= n; ++k) {
    ScalarField acc = ScalarField::constant(s, 0.0);
    for (int i = 1; i <= n; ++i) {
      const ScalarField c = r(i, k).derivative(Space::t()) - r(i, 0).derivative(e.q(k));
      if (!c.is_zero()) acc = acc + p(i) * lift(c);
    }
    out.set(s.p(k), Space::t(), acc);
  }
  return out;
}

}  // namespace

Tensor11 complete_lift_tensor11(const Tensor11& r) {
  require_dt_free(r, "complete_lift_tensor11");
  return complete_lift_on(r, Space::phase(r.space().n()));
}

Tensor11 complete_lift_cotangent(const Tensor11& r) {
  require_dt_free(r, "complete_lift_cotangent");
  const Space& e = r.space();
  const int n = e.n();
  const Space s = Space::extended(n);
  Tensor11 out = complete_lift_on(r, s);
  for (int i = 1; i <= n; ++i) out.set(s.p0(), s.p(i), r(i, 0).pulled_back_to(s));
  for (int k = 1; k <= n; ++k) {
    ScalarField acc = ScalarField::constant(s, 0.0);
    for (int i = 1; i <= n; ++i) {
      const ScalarField c = r(i, 0).derivative(e.q(k)) - r(i, k).derivative(Space::t());
      if (!c.is_zero()) acc = acc + ScalarField::coordinate(s, s.p(i)) * c.pulled_back_to(s);
    }
    out.set(s.p0(), s.q(k), acc);
  }
  return out;
}

Tensor11 vlift_tensor02(const Tensor02& b) {
  require_base(b.space(), "vlift_tensor02");
  const int n = b.space().n();
  const Space j = Space::phase(n);
  Tensor11 out = Tensor11::zero(j);
  for (int jj = 1; jj <= n; ++jj) {
    for (int a = 0; a <= n; ++a) out.set(j.p(jj), a, b(a, jj).pulled_back_to(j));
  }
  return out;
}

Tensor11 vlift_twoform(const TwoForm& w) { return vlift_tensor02(retag<Tensor02Tag>(w)); }

CanonicalTheta canonical_theta(int n) {
  const Space j = Space::phase(n);
  TwoForm theta = TwoForm::zero(j);
  OneForm rep = OneForm::zero(j);
  std::vector<ScalarField> c = rep.components();
  for (int i = 1; i <= n; ++i) {
    const ScalarField p = ScalarField::coordinate(j, j.p(i));
    theta.set(j.q(i), Space::t(), p);
    theta.set(Space::t(), j.q(i), -p);
    c[static_cast<std::size_t>(j.q(i))] = p;
  }
  return {theta, OneForm(j, std::move(c))};
}

OneForm pullback(const OneForm& alpha, const Space& target) { return alpha.extended_to(target); }

TwoForm pullback(const TwoForm& w, const Space& target) {
  const std::vector<int> map = pullback_map(w.space(), target);
  TwoForm out = TwoForm::zero(target);
  for (int a = 0; a < w.dim(); ++a) {
    for (int b = 0; b < w.dim(); ++b) {
      out.set(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)], w(a, b).pulled_back_to(target));
    }
  }
  return out;
}

TwoForm pullback_along_section(const TwoForm& w, const OneForm& alpha) {
  require_base(alpha.space(), "pullback_along_section");
  const Space& e = alpha.space();
  const int n = e.n();
  const Space j = Space::phase(n);
  require_same_space(j, w.space(), "pullback_along_section");
  // The section as a map E -> PhaseJ, and its Jacobian d(phi^a)/dx^b.
  std::vector<ScalarField> phi;
  for (int a = 0; a <= n; ++a) phi.push_back(ScalarField::coordinate(e, a));
  for (int i = 1; i <= n; ++i) phi.push_back(alpha[i]);
  std::vector<Expr> repl;
  for (const auto& f : phi) repl.push_back(f.expr());
  auto on_e = [&](const ScalarField& f) { return ScalarField(e, f.expr().substitute(repl)); };
  TwoForm out = TwoForm::zero(e);
  for (int b = 0; b <= n; ++b) {
    for (int c = 0; c <= n; ++c) {
      ScalarField acc = ScalarField::constant(e, 0.0);
      for (int a = 0; a < j.dim(); ++a) {
        const ScalarField da = phi[static_cast<std::size_t>(a)].derivative(b);
        if (da.is_zero()) continue;
        for (int d = 0; d < j.dim(); ++d) {
          const ScalarField dd = phi[static_cast<std::size_t>(d)].derivative(c);
          if (dd.is_zero() || w(a, d).is_zero()) continue;
          acc = acc + on_e(w(a, d)) * da * dd;
        }
      }
      out.set(b, c, acc);
    }
  }
  return out;
}

}  // namespace jetlift
