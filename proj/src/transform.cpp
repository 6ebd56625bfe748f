#include "jetlift/transform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "jetlift/errors.hpp"

namespace jetlift {

namespace {

std::size_t at(int a, int b, int d) { return static_cast<std::size_t>(a * d + b); }

class Determinants {
 public:
  Determinants(std::span<const ScalarField> m, int d) : m_(m), d_(d) {}

  /// Determinant of the submatrix on the rows and columns whose bits are set.
  ScalarField minor(unsigned rows, unsigned cols) {
    const auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Space& space = m_[0].space();
    ScalarField acc = ScalarField::constant(space, 0.0);
    if (rows == 0) {
      acc = ScalarField::constant(space, 1.0);
    } else {
      int r = 0;
      while (!(rows & (1u << r))) ++r;
      int sign = 1;
      for (int c = 0; c < d_; ++c) {
        if (!(cols & (1u << c))) continue;
        const ScalarField& e = m_[at(r, c, d_)];
        if (!e.is_zero()) {
          const ScalarField term = e * minor(rows & ~(1u << r), cols & ~(1u << c));
          acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
      }
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  std::span<const ScalarField> m_;
  int d_;
  std::map<std::pair<unsigned, unsigned>, ScalarField> memo_;
};

}  // namespace

std::vector<ScalarField> symbolic_inverse(std::span<const ScalarField> m, int d) {
  if (m.size() != static_cast<std::size_t>(d * d) || d <= 0) throw SpaceMismatchError("matrix shape");
  Determinants dets(m, d);
  const unsigned all = (1u << d) - 1u;
  const ScalarField det = dets.minor(all, all);
  if (det.is_zero()) throw SingularJacobianError("determinant is identically zero");
  std::vector<ScalarField> out(static_cast<std::size_t>(d * d), ScalarField::constant(m[0].space(), 0.0));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // inverse(a, b) = cofactor(b, a) / det
      ScalarField cof = dets.minor(all & ~(1u << b), all & ~(1u << a));
      if (cof.is_zero()) continue;
      if ((a + b) % 2 == 1) cof = -cof;
      out[at(a, b, d)] = cof / det;
    }
  }
  return out;
}

struct CoordinateChange::Impl {
  Space space;
  std::vector<ScalarField> forward;
  std::optional<std::vector<ScalarField>> inverse;
  std::vector<ScalarField> inverse_pulled;  // inverse fields placed on the chart variables

  mutable std::once_flag jac_once;
  mutable std::optional<Jacobian> jac;
  mutable std::once_flag inv_once;
  mutable std::optional<Jacobian> inv_jac;
  mutable std::once_flag grad_once;
  mutable std::vector<std::vector<ScalarField>> forward_grad;

  Impl(Space s, std::vector<ScalarField> f, std::optional<std::vector<ScalarField>> i)
      : space(std::move(s)), forward(std::move(f)), inverse(std::move(i)) {}

  const Jacobian& jacobian() const {
    std::call_once(jac_once, [this] {
      const int d = space.dim();
      Jacobian j = Jacobian::zero(space);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) j.set(a, b, forward[static_cast<std::size_t>(a)].derivative(b));
      }
      jac = std::move(j);
    });
    return *jac;
  }

  const Jacobian& inverse_jacobian() const {
    std::call_once(inv_once, [this] {
      inv_jac = Jacobian(space, symbolic_inverse(jacobian().components(), space.dim()));
    });
    return *inv_jac;
  }

  Eigen::MatrixXd jacobian_at(std::span<const double> x) const {
    const int d = space.dim();
    const Jacobian& j = jacobian();
    Eigen::MatrixXd m(d, d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) m(a, b) = j(a, b)(x);
    }
    return m;
  }

  std::vector<double> forward_point(std::span<const double> x) const {
    std::vector<double> y(forward.size());
    for (std::size_t a = 0; a < forward.size(); ++a) y[a] = forward[a](x);
    return y;
  }

  std::vector<double> newton(std::span<const double> y, std::span<const double> seed) const {
    const int d = space.dim();
    std::vector<double> x(seed.begin(), seed.end());
    double scale = 1.0;
    for (double v : y) scale = std::max(scale, std::abs(v));
    for (int iter = 0; iter < kNewtonMaxIterations; ++iter) {
      const std::vector<double> fx = forward_point(x);
      Eigen::VectorXd r(d);
      double norm = 0.0;
      for (int a = 0; a < d; ++a) {
        r(a) = fx[static_cast<std::size_t>(a)] - y[static_cast<std::size_t>(a)];
        norm = std::max(norm, std::abs(r(a)));
      }
      if (norm <= kNewtonTolerance * scale) return x;
      const Eigen::MatrixXd j = jacobian_at(x);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
      if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-14) {
        throw SingularJacobianError("singular Jacobian during Newton iteration");
      }
      const Eigen::VectorXd dx = lu.solve(r);
      for (int a = 0; a < d; ++a) x[static_cast<std::size_t>(a)] -= dx(a);
    }
    throw NewtonFailureError("Newton iteration did not converge");
  }
};

namespace {

/// g o x(y) for an old-chart field g, with gradient grad_x g . dx/dy.
class PulledField final : public ProceduralFunction {
 public:
  PulledField(ScalarField g, CoordinateChange change) : g_(std::move(g)), change_(std::move(change)) {
    for (int a = 0; a < g_.space().dim(); ++a) grad_.push_back(g_.derivative(a));
  }
  std::size_t arity() const override { return grad_.size(); }
  double evaluate(std::span<const double> y, std::span<double> gradient) const override {
    const std::vector<double> x = change_.inverse_point(y);
    const Eigen::MatrixXd j = change_.jacobian_at(x);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
    if (!lu.isInvertible()) throw SingularJacobianError("singular Jacobian");
    const Eigen::MatrixXd jinv = lu.inverse();
    const int d = static_cast<int>(grad_.size());
    Eigen::RowVectorXd gx(d);
    for (int a = 0; a < d; ++a) gx(a) = grad_[static_cast<std::size_t>(a)](x);
    const Eigen::RowVectorXd gy = gx * jinv;
    for (int b = 0; b < d; ++b) gradient[static_cast<std::size_t>(b)] = gy(b);
    return g_(x);
  }
  std::string name() const override { return "pulled"; }

 private:
  ScalarField g_;
  CoordinateChange change_;
  std::vector<ScalarField> grad_;
};

bool all_symbolic(std::span<const ScalarField> fs) {
  for (const auto& f : fs) {
    if (!f.is_symbolic()) return false;
  }
  return true;
}

}  // namespace

CoordinateChange::CoordinateChange(Space space, std::vector<ScalarField> forward,
                                   std::optional<std::vector<ScalarField>> inverse) {
  const auto d = static_cast<std::size_t>(space.dim());
  if (forward.size() != d) throw SpaceMismatchError("coordinate change needs one field per coordinate");
  for (const auto& f : forward) require_same_space(space, f.space(), "coordinate change");
  if (inverse) {
    if (inverse->size() != d) throw SpaceMismatchError("inverse needs one field per coordinate");
    for (const auto& f : *inverse) require_same_space(space, f.space(), "coordinate change inverse");
  }
  impl_ = std::make_shared<Impl>(std::move(space), std::move(forward), std::move(inverse));
}

CoordinateChange CoordinateChange::identity(const Space& space) {
  std::vector<ScalarField> f;
  for (int a = 0; a < space.dim(); ++a) f.push_back(ScalarField::coordinate(space, a));
  return CoordinateChange(space, f, f);
}

const Space& CoordinateChange::space() const noexcept { return impl_->space; }
const std::vector<ScalarField>& CoordinateChange::forward() const noexcept { return impl_->forward; }
bool CoordinateChange::has_inverse() const noexcept { return impl_->inverse.has_value(); }

const std::vector<ScalarField>& CoordinateChange::inverse() const {
  if (!impl_->inverse) throw PreconditionError("coordinate change has no symbolic inverse");
  return *impl_->inverse;
}

const Jacobian& CoordinateChange::jacobian() const { return impl_->jacobian(); }
const Jacobian& CoordinateChange::inverse_jacobian() const { return impl_->inverse_jacobian(); }

std::vector<double> CoordinateChange::forward_point(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(space().dim())) throw SpaceMismatchError("point dimension");
  return impl_->forward_point(x);
}

std::vector<double> CoordinateChange::inverse_point(std::span<const double> y) const {
  if (y.size() != static_cast<std::size_t>(space().dim())) throw SpaceMismatchError("point dimension");
  if (impl_->inverse) {
    std::vector<double> x(y.size());
    for (std::size_t a = 0; a < y.size(); ++a) x[a] = (*impl_->inverse)[a](y);
    return x;
  }
  return impl_->newton(y, y);
}

std::vector<double> CoordinateChange::inverse_point_newton(std::span<const double> y,
                                                           std::span<const double> seed) const {
  if (y.size() != seed.size() || y.size() != static_cast<std::size_t>(space().dim())) {
    throw SpaceMismatchError("point dimension");
  }
  return impl_->newton(y, seed);
}

Eigen::MatrixXd CoordinateChange::jacobian_at(std::span<const double> x) const { return impl_->jacobian_at(x); }

CoordinateChange CoordinateChange::reversed() const {
  return CoordinateChange(space(), inverse(), forward());
}

ScalarField CoordinateChange::to_new_chart(const ScalarField& f) const {
  require_same_space(space(), f.space(), "chart change");
  if (f.expr().is_constant()) return f;
  if (impl_->inverse && f.is_symbolic() && all_symbolic(*impl_->inverse)) {
    std::vector<Expr> repl;
    repl.reserve(impl_->inverse->size());
    for (const auto& g : *impl_->inverse) repl.push_back(g.expr());
    return ScalarField(space(), f.expr().substitute(repl));
  }
  return ScalarField::procedural(space(), std::make_shared<PulledField>(f, *this));
}

// ---------------------------------------------------------------------------
// Frames

namespace {

template <class M>
M matrix_product(const Jacobian& left, const M& mid, const Jacobian& right, bool left_t, bool right_t) {
  // out = L' * mid * R', with L' = L or L^T and R' = R or R^T.
  const int d = mid.dim();
  auto lv = [&](int a, int b) -> const ScalarField& { return left_t ? left(b, a) : left(a, b); };
  auto rv = [&](int a, int b) -> const ScalarField& { return right_t ? right(b, a) : right(a, b); };
  M tmp = M::zero(mid.space());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = ScalarField::constant(mid.space(), 0.0);
      for (int k = 0; k < d; ++k) {
        if (!lv(a, k).is_zero() && !mid(k, b).is_zero()) acc = acc + lv(a, k) * mid(k, b);
      }
      tmp.set(a, b, acc);
    }
  }
  M out = M::zero(mid.space());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ScalarField acc = ScalarField::constant(mid.space(), 0.0);
      for (int k = 0; k < d; ++k) {
        if (!tmp(a, k).is_zero() && !rv(k, b).is_zero()) acc = acc + tmp(a, k) * rv(k, b);
      }
      out.set(a, b, acc);
    }
  }
  return out;
}

template <class T>
T to_chart(const T& frame, const CoordinateChange& c) {
  std::vector<ScalarField> out;
  out.reserve(frame.components().size());
  for (const auto& f : frame.components()) out.push_back(c.to_new_chart(f));
  return T(frame.space(), std::move(out));
}

const CoordinateChange& pick(const CoordinateChange& c, Direction d, std::optional<CoordinateChange>& storage) {
  if (d == Direction::Forward) return c;
  storage = c.reversed();
  return *storage;
}

}  // namespace

VectorField frame_components(const VectorField& x, const CoordinateChange& c) {
  require_same_space(c.space(), x.space(), "transform");
  const Jacobian& j = c.jacobian();
  std::vector<ScalarField> out;
  for (int a = 0; a < x.dim(); ++a) {
    ScalarField acc = ScalarField::constant(x.space(), 0.0);
    for (int b = 0; b < x.dim(); ++b) {
      if (!j(a, b).is_zero() && !x[b].is_zero()) acc = acc + j(a, b) * x[b];
    }
    out.push_back(acc);
  }
  return VectorField(x.space(), std::move(out));
}

OneForm frame_components(const OneForm& alpha, const CoordinateChange& c) {
  require_same_space(c.space(), alpha.space(), "transform");
  const Jacobian& ji = c.inverse_jacobian();
  std::vector<ScalarField> out;
  for (int b = 0; b < alpha.dim(); ++b) {
    ScalarField acc = ScalarField::constant(alpha.space(), 0.0);
    for (int a = 0; a < alpha.dim(); ++a) {
      if (!ji(a, b).is_zero() && !alpha[a].is_zero()) acc = acc + alpha[a] * ji(a, b);
    }
    out.push_back(acc);
  }
  return OneForm(alpha.space(), std::move(out));
}

Tensor11 frame_components(const Tensor11& r, const CoordinateChange& c) {
  require_same_space(c.space(), r.space(), "transform");
  return matrix_product(c.jacobian(), r, c.inverse_jacobian(), false, false);
}

Tensor02 frame_components(const Tensor02& b, const CoordinateChange& c) {
  require_same_space(c.space(), b.space(), "transform");
  return matrix_product(c.inverse_jacobian(), b, c.inverse_jacobian(), true, false);
}

TwoForm frame_components(const TwoForm& w, const CoordinateChange& c) {
  require_same_space(c.space(), w.space(), "transform");
  return matrix_product(c.inverse_jacobian(), w, c.inverse_jacobian(), true, false);
}

Bivector frame_components(const Bivector& l, const CoordinateChange& c) {
  require_same_space(c.space(), l.space(), "transform");
  return matrix_product(c.jacobian(), l, c.jacobian(), false, true);
}

Tensor12 frame_components(const Tensor12& n, const CoordinateChange& c) {
  require_same_space(c.space(), n.space(), "transform");
  const Jacobian& j = c.jacobian();
  const Jacobian& ji = c.inverse_jacobian();
  const int d = n.dim();
  const Space& s = n.space();
  Tensor12 out = Tensor12::zero(s);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int cc = 0; cc < d; ++cc) {
        ScalarField acc = ScalarField::constant(s, 0.0);
        for (int e = 0; e < d; ++e) {
          if (j(a, e).is_zero()) continue;
          for (int f = 0; f < d; ++f) {
            if (ji(f, b).is_zero()) continue;
            for (int g = 0; g < d; ++g) {
              if (ji(g, cc).is_zero() || n(e, f, g).is_zero()) continue;
              acc = acc + j(a, e) * n(e, f, g) * ji(f, b) * ji(g, cc);
            }
          }
        }
        out.set(a, b, cc, acc);
      }
    }
  }
  return out;
}

ScalarField transform(const ScalarField& f, const CoordinateChange& c, Direction d) {
  std::optional<CoordinateChange> s;
  return pick(c, d, s).to_new_chart(f);
}

#define JETLIFT_TRANSFORM(Type)                                                  \
  Type transform(const Type& obj, const CoordinateChange& c, Direction d) {      \
    std::optional<CoordinateChange> s;                                           \
    const CoordinateChange& cc = pick(c, d, s);                                  \
    return to_chart(frame_components(obj, cc), cc);                              \
  }

JETLIFT_TRANSFORM(VectorField)
JETLIFT_TRANSFORM(OneForm)
JETLIFT_TRANSFORM(Tensor11)
JETLIFT_TRANSFORM(Tensor02)
JETLIFT_TRANSFORM(TwoForm)
JETLIFT_TRANSFORM(Bivector)
JETLIFT_TRANSFORM(Tensor12)

#undef JETLIFT_TRANSFORM

// ---------------------------------------------------------------------------
// Fibred transforms

namespace {

CoordinateChange make_base(int n, const std::vector<ScalarField>& q_forward,
                           const std::optional<std::vector<ScalarField>>& q_inverse) {
  const Space e = Space::base(n);
  if (q_forward.size() != static_cast<std::size_t>(n)) throw SpaceMismatchError("fibred transform needs n fields");
  std::vector<ScalarField> fwd{ScalarField::coordinate(e, Space::t())};
  for (const auto& f : q_forward) {
    require_same_space(e, f.space(), "fibred transform");
    fwd.push_back(f);
  }
  std::optional<std::vector<ScalarField>> inv;
  if (q_inverse) {
    if (q_inverse->size() != static_cast<std::size_t>(n)) throw SpaceMismatchError("fibred inverse needs n fields");
    inv.emplace();
    inv->push_back(ScalarField::coordinate(e, Space::t()));
    for (const auto& f : *q_inverse) {
      require_same_space(e, f.space(), "fibred transform inverse");
      inv->push_back(f);
    }
  }
  return CoordinateChange(e, std::move(fwd), std::move(inv));
}

CoordinateChange make_phase(int n, const CoordinateChange& base) {
  const Space e = base.space();
  const Space j = Space::phase(n);
  const Jacobian& ji = base.inverse_jacobian();
  std::vector<ScalarField> fwd;
  for (const auto& f : base.forward()) fwd.push_back(f.pulled_back_to(j));
  for (int jj = 1; jj <= n; ++jj) {
    ScalarField acc = ScalarField::constant(j, 0.0);
    for (int i = 1; i <= n; ++i) {
      const ScalarField& k = ji(e.q(i), e.q(jj));
      if (!k.is_zero()) acc = acc + ScalarField::coordinate(j, j.p(i)) * k.pulled_back_to(j);
    }
    fwd.push_back(acc);
  }
  std::optional<std::vector<ScalarField>> inv;
  if (base.has_inverse()) {
    const Jacobian& jac = base.jacobian();
    inv.emplace();
    for (const auto& f : base.inverse()) inv->push_back(f.pulled_back_to(j));
    for (int i = 1; i <= n; ++i) {
      ScalarField acc = ScalarField::constant(j, 0.0);
      for (int jj = 1; jj <= n; ++jj) {
        const ScalarField& k = jac(e.q(jj), e.q(i));
        if (!k.is_zero()) {
          acc = acc + ScalarField::coordinate(j, j.p(jj)) * base.to_new_chart(k).pulled_back_to(j);
        }
      }
      inv->push_back(acc);
    }
  }
  return CoordinateChange(j, std::move(fwd), std::move(inv));
}

}  // namespace

FibredTransform::FibredTransform(int n, std::vector<ScalarField> q_forward,
                                 std::optional<std::vector<ScalarField>> q_inverse)
    : n_(n), base_(make_base(n, q_forward, q_inverse)), phase_(make_phase(n, base_)) {}

}  // namespace jetlift
