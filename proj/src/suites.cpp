#include "jetlift/suites.hpp"

#include <functional>
#include <map>

#include "jetlift/calculus.hpp"
#include "jetlift/errors.hpp"
#include "jetlift/lifts.hpp"
#include "jetlift/pn.hpp"

namespace jetlift {

namespace {

struct Runner {
  const Corpus& c;
  const SampleSpec& spec;
  CheckReport& report;
  Space e;
  Space j;

  Runner(const Corpus& corpus, const SampleSpec& s, CheckReport& r)
      : c(corpus), spec(s), report(r), e(Space::base(corpus.n)), j(Space::phase(corpus.n)) {}

  void zero(const std::string& id, const std::string& ref, const Space& space, const ResidualFn& fn) {
    report.add(id, ref, space, spec, fn);
  }

  Named<VectorField> all_x() const {
    Named<VectorField> out = c.vertical;
    out.insert(out.end(), c.time_normalized.begin(), c.time_normalized.end());
    return out;
  }

  OneForm pi(const OneForm& a) const { return pullback(a, j); }
  ScalarField pi(const ScalarField& f) const { return f.pulled_back_to(j); }
  OneForm df(const VectorField& x) const { return differential(momentum_function(x)); }
};

template <class T>
void need(const Named<T>& v, const char* what, const std::string& suite) {
  if (v.empty()) throw ModelError("suite " + suite + " needs at least one " + what);
}

std::string tag(std::initializer_list<std::string> names) {
  std::string out = "[";
  bool first = true;
  for (const auto& n : names) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "]";
}

void lemma1(Runner& r) {
  need(r.c.scalars, "scalar", "lemma1");
  for (const auto& [fn, f] : r.c.scalars) {
    for (const auto& [an, a] : r.c.forms) {
      r.zero("v(f a)" + tag({fn, an}), "v(f alpha) = f v(alpha)", r.j,
             difference(vlift_oneform(f * a), r.pi(f) * vlift_oneform(a)));
    }
    for (const auto& [rn, t] : r.c.tensors) {
      r.zero("v(f R)" + tag({fn, rn}), "v(f R) = f v(R)", r.j,
             difference(vlift_tensor11(f * t), r.pi(f) * vlift_tensor11(t)));
    }
    for (const auto& [xn, x] : r.c.vertical) {
      r.zero("lift(f X)" + tag({fn, xn}), "lift(f X) = f lift(X) - F_X v(df)", r.j,
             difference(complete_lift_vector(f * x),
                        r.pi(f) * complete_lift_vector(x) - momentum_function(x) * vlift_oneform(differential(f))));
    }
    for (const auto& [xn, x] : r.all_x()) {
      for (const auto& [rn, t] : r.c.tensors) {
        const OneForm d = differential(f);
        r.zero("L_(f X) R" + tag({fn, xn, rn}), "L_(fX) R = f L_X R - X (x) R(df) + R(X) (x) df", r.e,
               difference(lie_derivative(f * x, t), f * lie_derivative(x, t) - tensor_product(x, adjoint(t, d)) +
                                                        tensor_product(apply(t, x), d)));
      }
    }
  }
}

void brackets(Runner& r) {
  const auto xs = r.all_x();
  for (const auto& [an, a] : r.c.forms) {
    for (const auto& [bn, b] : r.c.forms) {
      r.zero("[v(a),v(b)]" + tag({an, bn}), "[v(alpha), v(beta)] = 0", r.j,
             magnitude(lie_bracket(vlift_oneform(a), vlift_oneform(b))));
    }
    for (const auto& [xn, x] : xs) {
      r.zero("[lift(X),v(a)]" + tag({xn, an}), "[lift(X), v(alpha)] = v(L_X alpha)", r.j,
             difference(lie_bracket(complete_lift_vector(x), vlift_oneform(a)), vlift_oneform(lie_derivative(x, a))));
    }
    for (const auto& [rn, t] : r.c.tensors) {
      r.zero("[v(a),v(R)]" + tag({an, rn}), "[v(alpha), v(R)] = v(R(alpha))", r.j,
             difference(lie_bracket(vlift_oneform(a), vlift_tensor11(t)), vlift_oneform(adjoint(t, a))));
    }
  }
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (std::size_t m = k + 1; m < xs.size(); ++m) {
      const auto& [xn, x] = xs[k];
      const auto& [yn, y] = xs[m];
      r.zero("[lift(X),lift(Y)]" + tag({xn, yn}), "[lift(X), lift(Y)] = lift([X, Y])", r.j,
             difference(lie_bracket(complete_lift_vector(x), complete_lift_vector(y)),
                        complete_lift_vector(lie_bracket(x, y))));
    }
  }
  for (const auto& [rn, t] : r.c.tensors) {
    for (const auto& [sn, s] : r.c.tensors) {
      r.zero("[v(R1),v(R2)]" + tag({rn, sn}), "[v(R1), v(R2)] = v(R1 R2 - R2 R1)", r.j,
             difference(lie_bracket(vlift_tensor11(t), vlift_tensor11(s)),
                        vlift_tensor11(compose(t, s) - compose(s, t))));
    }
    for (const auto& [xn, x] : xs) {
      r.zero("[lift(X),v(R)]" + tag({xn, rn}), "[lift(X), v(R)] = v(L_X R)", r.j,
             difference(lie_bracket(complete_lift_vector(x), vlift_tensor11(t)), vlift_tensor11(lie_derivative(x, t))));
    }
  }
}

void theta(Runner& r) {
  const CanonicalTheta th = canonical_theta(r.c.n);
  const OneForm dt = OneForm::basis(r.j, Space::t());
  for (const auto& [xn, x] : r.all_x()) {
    r.zero("L_lift(X) Theta" + tag({xn}), "L_lift(X) Theta = 0", r.j,
           magnitude(lie_derivative(complete_lift_vector(x), th.theta)));
  }
  for (const auto& [xn, x] : r.c.vertical) {
    r.zero("i_lift(X) Theta" + tag({xn}), "i_lift(X) Theta = F_X dt", r.j,
           difference(interior_product(complete_lift_vector(x), th.theta), momentum_function(x) * dt));
  }
  for (const auto& [xn, x] : r.c.time_normalized) {
    r.zero("i_lift(X) Theta ^ dt" + tag({xn}), "i_lift(X) Theta ^ dt = -Theta", r.j,
           difference(wedge(interior_product(complete_lift_vector(x), th.theta), dt), -th.theta));
  }
  for (const auto& [an, a] : r.c.forms) {
    r.zero("section pullback" + tag({an}), "alpha* Theta = alpha ^ dt", r.e,
           difference(pullback_along_section(th.theta, a), wedge(a, OneForm::basis(r.e, Space::t()))));
  }
  Tensor11 id = Tensor11::zero(r.e);
  for (int i = 1; i <= r.c.n; ++i) id.set(i, i, ScalarField::constant(r.e, 1.0));
  r.zero("h(identity)", "h(sum_i d/dq^i (x) dq^i) = p_i dq^i", r.j, difference(hlift_tensor11(id), th.representative));
  r.zero("Theta", "Theta = representative ^ dt", r.j, difference(th.theta, wedge(th.representative, dt)));
}

void theorem1(Runner& r) {
  const auto xs = r.all_x();
  for (const auto& [rn, t] : r.c.tensors) {
    const Tensor11 rt = complete_lift_tensor11(t);
    for (const auto& [an, a] : r.c.forms) {
      r.zero("lift(R)(v(a))" + tag({rn, an}), "lift(R)(v(alpha)) = v(R(alpha))", r.j,
             difference(apply(rt, vlift_oneform(a)), vlift_oneform(adjoint(t, a))));
    }
    for (const auto& [xn, x] : xs) {
      const Tensor11 lx = lie_derivative(x, t);
      r.zero("lift(R)(lift(X))" + tag({rn, xn}), "lift(R)(lift(X)) = lift(R(X)) + v(L_X R)", r.j,
             difference(apply(rt, complete_lift_vector(x)),
                        complete_lift_vector(apply(t, x)) + vlift_tensor11(lx)));
      r.zero("(L_X R)(dt)" + tag({rn, xn}), "(L_X R)(dt) = 0", r.e,
             magnitude(adjoint(lx, OneForm::basis(r.e, Space::t()))));
    }
    for (const auto& [xn, x] : r.c.vertical) {
      r.zero("v(R)(F_X)" + tag({rn, xn}), "v(R)(F_X) = F_(R X)", r.j,
             difference(directional(vlift_tensor11(t), momentum_function(x)), momentum_function(apply(t, x))));
    }
    for (const auto& [fn, f] : r.c.scalars) {
      r.zero("v(R)(pi* f)" + tag({rn, fn}), "v(R)(pi* f) = 0", r.j,
             [v = directional(vlift_tensor11(t), r.pi(f))](std::span<const double> z) { return std::abs(v(z)); });
    }
  }
  for (const auto& [an, a] : r.c.forms) {
    for (const auto& [xn, x] : r.c.vertical) {
      r.zero("v(a)(F_X)" + tag({an, xn}), "v(alpha)(F_X) = pi*<X, alpha>", r.j,
             difference(directional(vlift_oneform(a), momentum_function(x)), r.pi(pair(x, a))));
      r.zero("v(X (x) a)" + tag({xn, an}), "v(Y (x) beta) = F_Y v(beta)", r.j,
             difference(vlift_tensor11(tensor_product(x, a)), momentum_function(x) * vlift_oneform(a)));
    }
    for (const auto& [fn, f] : r.c.scalars) {
      r.zero("v(a)(pi* f)" + tag({an, fn}), "v(alpha)(pi* f) = 0", r.j,
             [v = directional(vlift_oneform(a), r.pi(f))](std::span<const double> z) { return std::abs(v(z)); });
    }
  }
  for (const auto& [wn, w] : r.c.two_forms) {
    const Tensor11 vw = vlift_twoform(w);
    for (const auto& [an, a] : r.c.forms) {
      r.zero("v(w)(v(a))" + tag({wn, an}), "v(omega)(v(alpha)) = 0", r.j, magnitude(apply(vw, vlift_oneform(a))));
    }
    for (const auto& [xn, x] : xs) {
      r.zero("v(w)(lift(X))" + tag({wn, xn}), "v(omega)(lift(X)) = v(i_X omega)", r.j,
             difference(apply(vw, complete_lift_vector(x)), vlift_oneform(interior_product(x, w))));
    }
  }
}

void prop2(Runner& r) {
  need(r.c.tensors, "tensor", "prop2");
  const Space t = Space::extended(r.c.n);
  for (const auto& [rn, m] : r.c.tensors) {
    const Tensor11 u = complete_lift_cotangent(m);
    const Tensor11 v = complete_lift_tensor11(m);
    std::vector<ResidualFn> parts;
    for (int a = 0; a < r.j.dim(); ++a) {
      const OneForm s = OneForm::basis(r.j, a);
      parts.push_back(difference(adjoint(u, pullback(s, t)), pullback(adjoint(v, s), t)));
    }
    r.zero("rho-related" + tag({rn}), "U(rho* sigma) = rho*(V(sigma))", t, max_of(std::move(parts)));
  }
}

void prop3(Runner& r) {
  need(r.c.tensors, "tensor", "prop3");
  for (const auto& [rn, t] : r.c.tensors) {
    const Tensor11 rt = complete_lift_tensor11(t);
    for (const auto& [an, a] : r.c.forms) {
      r.zero("lift(R)(pi* a)" + tag({rn, an}), "lift(R)(pi* alpha) = pi* R(alpha)", r.j,
             difference(adjoint(rt, r.pi(a)), r.pi(adjoint(t, a))));
    }
    for (const auto& [xn, x] : r.c.vertical) {
      r.zero("lift(R)(dF_X)" + tag({rn, xn}), "lift(R)(dF_X) = dF_(R X) - h(L_X R)", r.j,
             difference(adjoint(rt, r.df(x)), r.df(apply(t, x)) - hlift_tensor11(lie_derivative(x, t))));
    }
  }
}

void prop4(Runner& r) {
  need(r.c.tensors, "tensor", "prop4");
  for (const auto& [rn, t] : r.c.tensors) {
    const Tensor11 rt = complete_lift_tensor11(t);
    for (const auto& [xn, x] : r.all_x()) {
      r.zero("L_lift(X) lift(R)" + tag({rn, xn}), "L_lift(X) lift(R) = lift(L_X R)", r.j,
             difference(lie_derivative(complete_lift_vector(x), rt), complete_lift_tensor11(lie_derivative(x, t))));
    }
    for (const auto& [an, a] : r.c.forms) {
      const Tensor02 b = retag<Tensor02Tag>(exterior_derivative(adjoint(t, a))) - hook2(t, exterior_derivative(a));
      r.zero("L_v(a) lift(R)" + tag({rn, an}), "L_v(alpha) lift(R) = v(-R hook2 d alpha + d(R alpha))", r.j,
             difference(lie_derivative(vlift_oneform(a), rt), vlift_tensor02(b)));
    }
  }
}

void prop5(Runner& r) {
  need(r.c.tensors, "tensor", "prop5");
  for (const auto& [rn, t] : r.c.tensors) {
    const Tensor11 rt = complete_lift_tensor11(t);
    const Tensor11 rt2 = compose(rt, rt);
    const Tensor11 r2 = compose(t, t);
    const Tensor12 n = nijenhuis_torsion(t);
    for (const auto& [an, a] : r.c.forms) {
      r.zero("lift(R)^2(v(a))" + tag({rn, an}), "lift(R)^2(v(alpha)) = v(R^2(alpha))", r.j,
             difference(apply(rt2, vlift_oneform(a)), vlift_oneform(adjoint(r2, a))));
    }
    for (const auto& [xn, x] : r.all_x()) {
      r.zero("lift(R)^2(lift(X))" + tag({rn, xn}),
             "lift(R)^2(lift(X)) = lift(R^2 X) + v(L_X R^2) + v(i_X N_R)", r.j,
             difference(apply(rt2, complete_lift_vector(x)),
                        complete_lift_vector(apply(r2, x)) + vlift_tensor11(lie_derivative(x, r2)) +
                            vlift_tensor11(interior_product(x, n))));
    }
  }
}

void prop6(Runner& r) {
  need(r.c.tensors, "tensor", "prop6");
  const auto xs = r.all_x();
  for (const auto& [rn, t] : r.c.tensors) {
    const Tensor12 nt = nijenhuis_torsion(complete_lift_tensor11(t));
    const Tensor12 n = nijenhuis_torsion(t);
    for (const auto& [an, a] : r.c.forms) {
      for (const auto& [bn, b] : r.c.forms) {
        r.zero("N(v(a),v(b))" + tag({rn, an, bn}), "N_lift(R)(v(alpha), v(beta)) = 0", r.j,
               magnitude(contract(nt, vlift_oneform(a), vlift_oneform(b))));
      }
      for (const auto& [xn, x] : xs) {
        r.zero("N(lift(X),v(a))" + tag({rn, xn, an}), "N_lift(R)(lift(X), v(alpha)) = v((i_X N_R)(alpha))", r.j,
               difference(contract(nt, complete_lift_vector(x), vlift_oneform(a)),
                          vlift_oneform(adjoint(interior_product(x, n), a))));
      }
    }
    for (std::size_t k = 0; k < xs.size(); ++k) {
      for (std::size_t m = k + 1; m < xs.size(); ++m) {
        const auto& [xn, x] = xs[k];
        const auto& [yn, y] = xs[m];
        const Tensor11 ix = interior_product(x, n);
        const Tensor11 iy = interior_product(y, n);
        const VectorField rhs = complete_lift_vector(contract(n, x, y)) +
                                vlift_tensor11(interior_product(lie_bracket(x, y), n)) +
                                vlift_tensor11(lie_derivative(y, ix) - lie_derivative(x, iy));
        r.zero("N(lift(X),lift(Y))" + tag({rn, xn, yn}),
               "N_lift(R)(lift(X), lift(Y)) = lift(N_R(X,Y)) + v(i_[X,Y] N_R) + v(L_Y i_X N_R - L_X i_Y N_R)", r.j,
               difference(contract(nt, complete_lift_vector(x), complete_lift_vector(y)), rhs));
      }
    }
  }
}

void theorem2(Runner& r) {
  need(r.c.tensors, "tensor", "theorem2");
  const double tol = r.report.tolerance;
  for (const auto& [rn, t] : r.c.tensors) {
    const SampleResult nr = sample_max(r.e, r.spec, magnitude(nijenhuis_torsion(t)));
    const Expectation ex = nr.max_residual < tol ? Expectation::Zero : Expectation::NonZero;
    r.report.add("N_R" + tag({rn}), "N_R", r.e, r.spec, magnitude(nijenhuis_torsion(t)), ex);
    r.report.add("N_lift(R)" + tag({rn}), "N_lift(R) = 0 iff N_R = 0", r.j, r.spec,
                 magnitude(nijenhuis_torsion(complete_lift_tensor11(t))), ex);
  }
}

CheckResult result(const std::string& id, const std::string& ref, double v, const std::vector<double>& pt,
                   double tol, Expectation ex) {
  CheckResult c;
  c.id = id;
  c.ref = ref;
  c.max_residual = v;
  c.worst_point = pt;
  c.tolerance = tol;
  c.expectation = ex;
  c.passed = ex == Expectation::Zero ? v < tol : v > tol;
  return c;
}

void theorem3(Runner& r) {
  need(r.c.tensors, "tensor", "theorem3");
  const double tol = r.report.tolerance;
  for (const auto& [rn, t] : r.c.tensors) {
    const PNReport pn = pn_check(t, r.spec, tol);
    const Expectation ex = pn.torsion_residual < tol ? Expectation::Zero : Expectation::NonZero;
    r.report.add(result("commutation" + tag({rn}), "P lift(R) = lift(R) P", pn.commutation_residual,
                        pn.commutation_point, tol, Expectation::Zero));
    r.report.add(result("mu" + tag({rn}), "mu(sigma, Z) = 0", pn.magri_morosi_residual, pn.magri_morosi_point, tol,
                        Expectation::Zero));
    r.report.add(result("N_R" + tag({rn}), "N_R", pn.torsion_residual, pn.torsion_point, tol, ex));
    r.report.add(result("N_lift(R)" + tag({rn}), "pn-structure iff N_R = 0", pn.lifted_torsion_residual,
                        pn.lifted_torsion_point, tol, ex));
    r.report.notes.emplace_back("verdict" + tag({rn}), pn.verdict());
  }
}

void prop7(Runner& r) {
  need(r.c.tensors, "tensor", "prop7");
  const Bivector lambda = canonical_poisson(r.c.n);
  std::vector<std::pair<std::string, OneForm>> sigmas;
  for (const auto& [an, a] : r.c.forms) sigmas.emplace_back("pi*" + an, r.pi(a));
  for (const auto& [xn, x] : r.c.vertical) sigmas.emplace_back("dF_" + xn, r.df(x));
  std::vector<std::pair<std::string, VectorField>> zs;
  for (const auto& [bn, b] : r.c.forms) zs.emplace_back("v(" + bn + ")", vlift_oneform(b));
  for (const auto& [yn, y] : r.all_x()) zs.emplace_back("lift(" + yn + ")", complete_lift_vector(y));

  for (const auto& [an, a] : r.c.forms) {
    r.zero("P(pi* a)" + tag({an}), "P(pi* alpha) = v(alpha)", r.j,
           difference(poisson_apply(lambda, r.pi(a)), vlift_oneform(a)));
  }
  for (const auto& [xn, x] : r.c.vertical) {
    r.zero("P(dF_X)" + tag({xn}), "P(dF_X) = -lift(X)", r.j,
           difference(poisson_apply(lambda, r.df(x)), -complete_lift_vector(x)));
  }
  for (const auto& [rn, t] : r.c.tensors) {
    r.zero("P(h(R))" + tag({rn}), "P(h(R)) = v(R)", r.j,
           difference(poisson_apply(lambda, hlift_tensor11(t)), vlift_tensor11(t)));
    const Tensor11 rt = complete_lift_tensor11(t);
    r.zero("commutation" + tag({rn}), "P lift(R) = lift(R) P", r.j,
           difference(poisson_after(lambda, rt), poisson_before(lambda, rt)));
    std::vector<ResidualFn> mu;
    for (const auto& [sn, s] : sigmas) {
      for (const auto& [zn, z] : zs) mu.push_back(magnitude(magri_morosi(rt, lambda, s, z)));
    }
    r.zero("mu" + tag({rn}), "mu(sigma, Z) = 0 on {pi* alpha, dF_X} x {v(beta), lift(Y)}", r.j, max_of(std::move(mu)));
  }
}

void lemma2(Runner& r) {
  need(r.c.tensors, "tensor", "lemma2");
  const auto ys = r.all_x();
  for (const auto& [an, a] : r.c.forms) {
    const OneForm pa = r.pi(a);
    for (const auto& [bn, b] : r.c.forms) {
      r.zero("L_v(b) pi* a" + tag({bn, an}), "L_v(beta) pi* alpha = 0", r.j, magnitude(lie_derivative(vlift_oneform(b), pa)));
    }
    for (const auto& [qn, q] : r.c.tensors) {
      r.zero("L_v(Q) pi* a" + tag({qn, an}), "L_v(Q) pi* alpha = 0", r.j, magnitude(lie_derivative(vlift_tensor11(q), pa)));
    }
    for (const auto& [yn, y] : ys) {
      r.zero("L_lift(Y) pi* a" + tag({yn, an}), "L_lift(Y) pi* alpha = pi* L_Y alpha", r.j,
             difference(lie_derivative(complete_lift_vector(y), pa), r.pi(lie_derivative(y, a))));
    }
  }
  for (const auto& [xn, x] : r.c.vertical) {
    const OneForm dfx = r.df(x);
    for (const auto& [bn, b] : r.c.forms) {
      r.zero("L_v(b) dF_X" + tag({bn, xn}), "L_v(beta) dF_X = pi* d i_X beta", r.j,
             difference(lie_derivative(vlift_oneform(b), dfx), r.pi(differential(pair(x, b)))));
    }
    for (const auto& [qn, q] : r.c.tensors) {
      r.zero("L_v(Q) dF_X" + tag({qn, xn}), "L_v(Q) dF_X = dF_(Q X)", r.j,
             difference(lie_derivative(vlift_tensor11(q), dfx), r.df(apply(q, x))));
    }
    for (const auto& [yn, y] : ys) {
      r.zero("L_lift(Y) dF_X" + tag({yn, xn}), "L_lift(Y) dF_X = dF_[Y, X]", r.j,
             difference(lie_derivative(complete_lift_vector(y), dfx), r.df(lie_bracket(y, x))));
    }
  }
  for (const auto& [rn, t] : r.c.tensors) {
    const OneForm h = hlift_tensor11(t);
    for (const auto& [bn, b] : r.c.forms) {
      r.zero("L_v(b) h(R)" + tag({bn, rn}), "L_v(beta) h(R) = pi* R(beta)", r.j,
             difference(lie_derivative(vlift_oneform(b), h), r.pi(adjoint(t, b))));
    }
    for (const auto& [qn, q] : r.c.tensors) {
      r.zero("L_v(Q) h(R)" + tag({qn, rn}), "L_v(Q) h(R) = h(Q o R)", r.j,
             difference(lie_derivative(vlift_tensor11(q), h), hlift_tensor11(compose(q, t))));
    }
    for (const auto& [yn, y] : ys) {
      r.zero("L_lift(Y) h(R)" + tag({yn, rn}), "L_lift(Y) h(R) = h(L_Y R)", r.j,
             difference(lie_derivative(complete_lift_vector(y), h), hlift_tensor11(lie_derivative(y, t))));
    }
  }
}

void naturality(Runner& r) {
  need(r.c.transforms, "transform", "naturality");
  const TwoForm th = canonical_theta(r.c.n).theta;
  for (const auto& [tn, tr] : r.c.transforms) {
    const CoordinateChange& b = tr.base();
    const CoordinateChange& p = tr.phase();
    for (const auto& [xn, x] : r.c.vertical) {
      r.zero("F" + tag({tn, xn}), "T(F_X) = F_T(X)", r.j,
             difference(transform(momentum_function(x), p), momentum_function(transform(x, b))));
    }
    for (const auto& [an, a] : r.c.forms) {
      r.zero("v(a)" + tag({tn, an}), "T(v(alpha)) = v(T(alpha))", r.j,
             difference(transform(vlift_oneform(a), p), vlift_oneform(transform(a, b))));
    }
    for (const auto& [xn, x] : r.all_x()) {
      r.zero("lift(X)" + tag({tn, xn}), "T(lift(X)) = lift(T(X))", r.j,
             difference(transform(complete_lift_vector(x), p), complete_lift_vector(transform(x, b))));
    }
    for (const auto& [rn, t] : r.c.tensors) {
      const Tensor11 tt = transform(t, b);
      r.zero("v(R)" + tag({tn, rn}), "T(v(R)) = v(T(R))", r.j,
             difference(transform(vlift_tensor11(t), p), vlift_tensor11(tt)));
      r.zero("h(R)" + tag({tn, rn}), "T(h(R)) = h(T(R))", r.j,
             difference(transform(hlift_tensor11(t), p), hlift_tensor11(tt)));
      r.zero("lift(R)" + tag({tn, rn}), "T(lift(R)) = lift(T(R))", r.j,
             difference(transform(complete_lift_tensor11(t), p), complete_lift_tensor11(tt)));
    }
    for (const auto& [wn, w] : r.c.two_forms) {
      r.zero("v(w)" + tag({tn, wn}), "T(v(omega)) = v(T(omega))", r.j,
             difference(transform(vlift_twoform(w), p), vlift_twoform(transform(w, b))));
    }
    r.zero("Theta" + tag({tn}), "T(Theta) = Theta", r.j, difference(transform(th, p), th));
  }
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"lemma1", lemma1},     {"brackets", brackets}, {"theta", theta},       {"theorem1", theorem1},
      {"prop2", prop2},       {"prop3", prop3},       {"prop4", prop4},       {"prop5", prop5},
      {"prop6", prop6},       {"prop7", prop7},       {"theorem2", theorem2}, {"theorem3", theorem3},
      {"lemma2", lemma2},     {"naturality", naturality},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

CheckReport run_suite(const std::string& suite, const Corpus& corpus, const SampleSpec& spec, double tolerance) {
  CheckReport report;
  report.suite = suite;
  report.seed = spec.seed;
  report.points = spec.points;
  report.tolerance = tolerance;
  for (const auto& [name, fn] : registry()) {
    if (name == suite) {
      Runner runner(corpus, spec, report);
      fn(runner);
      return report;
    }
  }
  throw ModelError("unknown suite '" + suite + "'");
}

}  // namespace jetlift
