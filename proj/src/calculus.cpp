#include "jetlift/calculus.hpp"

#include <vector>

namespace jetlift {

namespace {

using Fields = std::vector<ScalarField>;

ScalarField zero_on(const Space& s) { return ScalarField::constant(s, 0.0); }

// Table of d_k f for each entry f of a component list: table[i * dim + k].
Fields gradient_table(const Fields& fields, const Space& space) {
  const int d = space.dim();
  Fields out;
  out.reserve(fields.size() * static_cast<std::size_t>(d));
  for (const auto& f : fields) {
    for (int k = 0; k < d; ++k) out.push_back(f.derivative(k));
  }
  return out;
}

}  // namespace

VectorField apply(const Tensor11& r, const VectorField& x) {
  require_same_space(r.space(), x.space(), "apply");
  const int d = r.dim();
  Fields out;
  for (int a = 0; a < d; ++a) {
    ScalarField acc = zero_on(r.space());
    for (int b = 0; b < d; ++b) acc = acc + r(a, b) * x[b];
    out.push_back(acc);
  }
  return VectorField(r.space(), std::move(out));
}

OneForm adjoint(const Tensor11& r, const OneForm& alpha) {
  require_same_space(r.space(), alpha.space(), "adjoint");
  const int d = r.dim();
  Fields out;
  for (int b = 0; b < d; ++b) {
    ScalarField acc = zero_on(r.space());
    for (int a = 0; a < d; ++a) acc = acc + alpha[a] * r(a, b);
    out.push_back(acc);
  }
  return OneForm(r.space(), std::move(out));
}

ScalarField pair(const VectorField& x, const OneForm& alpha) {
  require_same_space(x.space(), alpha.space(), "pair");
  ScalarField acc = zero_on(x.space());
  for (int a = 0; a < x.dim(); ++a) acc = acc + x[a] * alpha[a];
  return acc;
}

Tensor11 compose(const Tensor11& a, const Tensor11& b) {
  require_same_space(a.space(), b.space(), "compose");
  const int d = a.dim();
  Tensor11 out = Tensor11::zero(a.space());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ScalarField acc = zero_on(a.space());
      for (int k = 0; k < d; ++k) acc = acc + a(i, k) * b(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

Tensor11 tensor_product(const VectorField& x, const OneForm& alpha) {
  require_same_space(x.space(), alpha.space(), "tensor_product");
  Tensor11 out = Tensor11::zero(x.space());
  for (int a = 0; a < x.dim(); ++a) {
    for (int b = 0; b < x.dim(); ++b) out.set(a, b, x[a] * alpha[b]);
  }
  return out;
}

Tensor11 identity_tensor(const Space& space) { return Tensor11::identity(space); }

ScalarField evaluate_form(const Tensor02& b, const VectorField& x, const VectorField& y) {
  require_same_space(b.space(), x.space(), "evaluate_form");
  require_same_space(b.space(), y.space(), "evaluate_form");
  ScalarField acc = zero_on(b.space());
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) acc = acc + b(i, j) * x[i] * y[j];
  }
  return acc;
}

ScalarField evaluate_form(const TwoForm& w, const VectorField& x, const VectorField& y) {
  return evaluate_form(retag<Tensor02Tag>(w), x, y);
}

ScalarField directional(const VectorField& x, const ScalarField& f) {
  require_same_space(x.space(), f.space(), "directional derivative");
  ScalarField acc = zero_on(x.space());
  for (int a = 0; a < x.dim(); ++a) {
    if (x[a].is_zero()) continue;
    acc = acc + x[a] * f.derivative(a);
  }
  return acc;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_space(x.space(), y.space(), "lie_bracket");
  Fields out;
  for (int a = 0; a < x.dim(); ++a) out.push_back(directional(x, y[a]) - directional(y, x[a]));
  return VectorField(x.space(), std::move(out));
}

ScalarField lie_derivative(const VectorField& x, const ScalarField& f) { return directional(x, f); }

VectorField lie_derivative(const VectorField& x, const VectorField& y) { return lie_bracket(x, y); }

OneForm lie_derivative(const VectorField& x, const OneForm& alpha) {
  require_same_space(x.space(), alpha.space(), "lie_derivative");
  const int d = x.dim();
  const Fields dx = gradient_table(x.components(), x.space());
  Fields out;
  for (int b = 0; b < d; ++b) {
    ScalarField acc = directional(x, alpha[b]);
    for (int a = 0; a < d; ++a) acc = acc + alpha[a] * dx[static_cast<std::size_t>(a * d + b)];
    out.push_back(acc);
  }
  return OneForm(x.space(), std::move(out));
}

Tensor11 lie_derivative(const VectorField& x, const Tensor11& r) {
  require_same_space(x.space(), r.space(), "lie_derivative");
  const int d = x.dim();
  const Fields dx = gradient_table(x.components(), x.space());
  auto grad_x = [&](int a, int k) -> const ScalarField& { return dx[static_cast<std::size_t>(a * d + k)]; };
  Tensor11 out = Tensor11::zero(x.space());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = directional(x, r(a, b));
      for (int c = 0; c < d; ++c) {
        acc = acc - r(c, b) * grad_x(a, c) + r(a, c) * grad_x(c, b);
      }
      out.set(a, b, acc);
    }
  }
  return out;
}

Tensor02 lie_derivative(const VectorField& x, const Tensor02& bf) {
  require_same_space(x.space(), bf.space(), "lie_derivative");
  const int d = x.dim();
  const Fields dx = gradient_table(x.components(), x.space());
  auto grad_x = [&](int a, int k) -> const ScalarField& { return dx[static_cast<std::size_t>(a * d + k)]; };
  Tensor02 out = Tensor02::zero(x.space());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = directional(x, bf(a, b));
      for (int c = 0; c < d; ++c) {
        acc = acc + bf(c, b) * grad_x(c, a) + bf(a, c) * grad_x(c, b);
      }
      out.set(a, b, acc);
    }
  }
  return out;
}

TwoForm lie_derivative(const VectorField& x, const TwoForm& w) {
  return retag<TwoFormTag>(lie_derivative(x, retag<Tensor02Tag>(w)));
}

OneForm differential(const ScalarField& f) {
  Fields out;
  for (int a = 0; a < f.space().dim(); ++a) out.push_back(f.derivative(a));
  return OneForm(f.space(), std::move(out));
}

TwoForm exterior_derivative(const OneForm& alpha) {
  const int d = alpha.dim();
  TwoForm out = TwoForm::zero(alpha.space());
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const ScalarField v = alpha[b].derivative(a) - alpha[a].derivative(b);
      out.set(a, b, v);
      out.set(b, a, -v);
    }
  }
  return out;
}

TwoForm wedge(const OneForm& alpha, const OneForm& beta) {
  require_same_space(alpha.space(), beta.space(), "wedge");
  const int d = alpha.dim();
  TwoForm out = TwoForm::zero(alpha.space());
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const ScalarField v = alpha[a] * beta[b] - alpha[b] * beta[a];
      out.set(a, b, v);
      out.set(b, a, -v);
    }
  }
  return out;
}

OneForm interior_product(const VectorField& x, const Tensor02& bf) {
  require_same_space(x.space(), bf.space(), "interior_product");
  const int d = x.dim();
  Fields out;
  for (int b = 0; b < d; ++b) {
    ScalarField acc = zero_on(x.space());
    for (int a = 0; a < d; ++a) acc = acc + x[a] * bf(a, b);
    out.push_back(acc);
  }
  return OneForm(x.space(), std::move(out));
}

OneForm interior_product(const VectorField& x, const TwoForm& w) {
  return interior_product(x, retag<Tensor02Tag>(w));
}

Tensor02 hook2(const Tensor11& r, const TwoForm& w) {
  require_same_space(r.space(), w.space(), "hook2");
  const int d = r.dim();
  Tensor02 out = Tensor02::zero(r.space());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = zero_on(r.space());
      for (int c = 0; c < d; ++c) acc = acc + r(c, a) * w(c, b);
      out.set(a, b, acc);
    }
  }
  return out;
}

Tensor12 nijenhuis_torsion(const Tensor11& r) {
  const Space& s = r.space();
  const int d = r.dim();
  const Fields dr = gradient_table(r.components(), s);
  // d_k R^a_b
  auto grad = [&](int a, int b, int k) -> const ScalarField& {
    return dr[static_cast<std::size_t>((a * d + b) * d + k)];
  };
  Tensor12 out = Tensor12::zero(s);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = b + 1; c < d; ++c) {
        ScalarField acc = zero_on(s);
        for (int k = 0; k < d; ++k) {
          acc = acc + r(k, b) * grad(a, c, k) - r(k, c) * grad(a, b, k) -
                r(a, k) * (grad(k, c, b) - grad(k, b, c));
        }
        out.set(a, b, c, acc);
        out.set(a, c, b, -acc);
      }
    }
  }
  return out;
}

VectorField nijenhuis_on(const Tensor11& r, const VectorField& x, const VectorField& y) {
  const VectorField rx = apply(r, x);
  const VectorField ry = apply(r, y);
  return lie_bracket(rx, ry) + apply(r, apply(r, lie_bracket(x, y))) - apply(r, lie_bracket(rx, y)) -
         apply(r, lie_bracket(x, ry));
}

Tensor12 haantjes_tensor(const Tensor11& r) {
  const Space& s = r.space();
  const int d = r.dim();
  const Tensor12 n = nijenhuis_torsion(r);
  const Tensor11 r2 = compose(r, r);
  // M^a_bc = R^a_k N^k_bc
  const Tensor12 rn = apply(r, n);
  Tensor12 out = Tensor12::zero(s);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = b + 1; c < d; ++c) {
        ScalarField acc = zero_on(s);
        for (int k = 0; k < d; ++k) {
          acc = acc + r2(a, k) * n(k, b, c);
          for (int e = 0; e < d; ++e) {
            acc = acc + n(a, k, e) * r(k, b) * r(e, c);
          }
        }
        for (int e = 0; e < d; ++e) acc = acc - rn(a, e, c) * r(e, b) - rn(a, b, e) * r(e, c);
        out.set(a, b, c, acc);
        out.set(a, c, b, -acc);
      }
    }
  }
  return out;
}

VectorField contract(const Tensor12& n, const VectorField& x, const VectorField& y) {
  require_same_space(n.space(), x.space(), "contract");
  require_same_space(n.space(), y.space(), "contract");
  const int d = n.dim();
  Fields out;
  for (int a = 0; a < d; ++a) {
    ScalarField acc = zero_on(n.space());
    for (int b = 0; b < d; ++b) {
      if (x[b].is_zero()) continue;
      for (int c = 0; c < d; ++c) acc = acc + n(a, b, c) * x[b] * y[c];
    }
    out.push_back(acc);
  }
  return VectorField(n.space(), std::move(out));
}

Tensor11 interior_product(const VectorField& x, const Tensor12& n) {
  require_same_space(n.space(), x.space(), "interior_product");
  const int d = n.dim();
  Tensor11 out = Tensor11::zero(n.space());
  for (int a = 0; a < d; ++a) {
    for (int c = 0; c < d; ++c) {
      ScalarField acc = zero_on(n.space());
      for (int b = 0; b < d; ++b) acc = acc + x[b] * n(a, b, c);
      out.set(a, c, acc);
    }
  }
  return out;
}

Tensor12 apply(const Tensor11& r, const Tensor12& n) {
  require_same_space(r.space(), n.space(), "apply");
  const int d = r.dim();
  Tensor12 out = Tensor12::zero(r.space());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        ScalarField acc = zero_on(r.space());
        for (int k = 0; k < d; ++k) acc = acc + r(a, k) * n(k, b, c);
        out.set(a, b, c, acc);
      }
    }
  }
  return out;
}

}  // namespace jetlift
