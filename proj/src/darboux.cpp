#include "jetlift/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jetlift/calculus.hpp"
#include "jetlift/errors.hpp"
#include "jetlift/lifts.hpp"
#include "jetlift/pn.hpp"

namespace jetlift {

namespace {

void require_dt_free(const Tensor11& r) {
  if (r.space().kind() != SpaceKind::BaseE) throw SpaceMismatchError("eigen analysis expects R on BaseE");
  if (!annihilates_dt(r)) throw PreconditionError("eigen analysis requires R(dt) = 0");
}

Eigen::MatrixXd block_at(const Tensor11& r, std::span<const double> x) {
  const int n = r.space().n();
  Eigen::MatrixXd a(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = r(i, j)(x);
  }
  return a;
}

EigenData analyse(const Eigen::MatrixXd& a, std::span<const double> point) {
  const int n = static_cast<int>(a.rows());
  Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw EigenError("eigen decomposition failed");
  const Eigen::VectorXcd values = es.eigenvalues();
  const Eigen::MatrixXcd vectors = es.eigenvectors();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int k = 0; k < n; ++k) {
    if (std::abs(values(k).imag()) > 1e-10 * scale) throw EigenError("complex eigenvalues");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return values(x).real() < values(y).real(); });

  EigenData out;
  out.point.assign(point.begin(), point.end());
  out.right.resize(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.eigenvalues.push_back(values(src).real());
    Eigen::VectorXd v = vectors.col(src).real();
    if (v.norm() == 0.0) v = vectors.col(src).imag();
    out.right.col(k) = v.normalized();
  }
  for (int k = 1; k < n; ++k) {
    if (out.eigenvalues[static_cast<std::size_t>(k)] - out.eigenvalues[static_cast<std::size_t>(k - 1)] < kEigenGap) {
      throw EigenError("eigenvalues closer than " + std::to_string(kEigenGap));
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(out.right);
  if (!lu.isInvertible() || lu.rcond() < 1e-12) throw EigenError("defective eigenvector basis");
  out.left = lu.inverse();
  const Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(out.eigenvalues.data(), n);
  const Eigen::MatrixXd rebuilt = out.right * lam.asDiagonal() * out.left;
  out.reconstruction_residual = (rebuilt - a).cwiseAbs().maxCoeff();
  if (out.reconstruction_residual > 1e-10 * scale) throw EigenError("block reconstruction failed");
  return out;
}

class EigenvalueFunction final : public ProceduralFunction {
 public:
  EigenvalueFunction(const Tensor11& r, int k) : r_(r), k_(k) {
    const Space& e = r.space();
    for (int i = 1; i <= e.n(); ++i) {
      for (int j = 1; j <= e.n(); ++j) {
        for (int m = 0; m < e.dim(); ++m) partials_.push_back(r(i, j).derivative(m));
      }
    }
  }
  std::size_t arity() const override { return static_cast<std::size_t>(r_.space().dim()); }
  double evaluate(std::span<const double> x, std::span<double> gradient) const override {
    const int n = r_.space().n();
    const int d = r_.space().dim();
    const EigenData data = analyse(block_at(r_, x), x);
    const Eigen::VectorXd v = data.right.col(k_ - 1);
    const Eigen::RowVectorXd u = data.left.row(k_ - 1);
    for (int m = 0; m < d; ++m) {
      Eigen::MatrixXd da(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) da(i, j) = partials_[static_cast<std::size_t>((i * n + j) * d + m)](x);
      }
      gradient[static_cast<std::size_t>(m)] = u * da * v;
    }
    return data.eigenvalues[static_cast<std::size_t>(k_ - 1)];
  }
  std::string name() const override { return "lambda" + std::to_string(k_); }

 private:
  Tensor11 r_;
  int k_;
  std::vector<ScalarField> partials_;
};

// Walks the segment a -> b. Each eigenvalue is predicted to first order, lambda_k + u_k dA v_k,
// and must stay nearest to the value with the same ascending label; a crossing swaps them.
void track_segment(const Tensor11& r, const std::vector<double>& a, const std::vector<double>& b, int steps) {
  Eigen::MatrixXd prev_block = block_at(r, a);
  EigenData prev = analyse(prev_block, a);
  std::vector<double> x(a.size());
  for (int s = 1; s <= steps; ++s) {
    const double w = static_cast<double>(s) / steps;
    for (std::size_t c = 0; c < a.size(); ++c) x[c] = (1.0 - w) * a[c] + w * b[c];
    const Eigen::MatrixXd block = block_at(r, x);
    EigenData cur = analyse(block, x);
    const Eigen::MatrixXd step = block - prev_block;
    for (std::size_t k = 0; k < prev.eigenvalues.size(); ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      const double predicted = prev.eigenvalues[k] + prev.left.row(kk) * step * prev.right.col(kk);
      std::size_t best = 0;
      for (std::size_t m = 1; m < cur.eigenvalues.size(); ++m) {
        if (std::abs(cur.eigenvalues[m] - predicted) < std::abs(cur.eigenvalues[best] - predicted)) best = m;
      }
      if (best != k) throw EigenError("eigenvalue labels not continuous across the domain");
    }
    prev_block = block;
    prev = std::move(cur);
  }
}

}  // namespace

EigenData eigen_analysis(const Tensor11& r, std::span<const double> point) {
  require_dt_free(r);
  if (point.size() != static_cast<std::size_t>(r.space().dim())) throw SpaceMismatchError("point dimension");
  return analyse(block_at(r, point), point);
}

ScalarField eigenvalue_field(const Tensor11& r, int k) {
  require_dt_free(r);
  if (k < 1 || k > r.space().n()) throw PreconditionError("eigenvalue index out of range");
  return ScalarField::procedural(r.space(), std::make_shared<EigenvalueFunction>(r, k));
}

FibredTransform build_dn_transform(const Tensor11& r, const SampleSpec& domain, double tolerance) {
  require_dt_free(r);
  const Space& e = r.space();
  const int n = e.n();
  const SampleResult torsion = sample_max(e, domain, magnitude(nijenhuis_torsion(r)));
  if (torsion.max_residual >= tolerance) {
    throw TorsionNonzeroError("N_R does not vanish on the domain (max " + std::to_string(torsion.max_residual) + ")");
  }
  std::vector<ScalarField> q;
  for (int k = 1; k <= n; ++k) q.push_back(eigenvalue_field(r, k));

  const std::vector<std::vector<double>> pts = draw_points(e, domain, domain.points);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    eigen_analysis(r, pts[s]);
    if (s > 0) track_segment(r, pts[s - 1], pts[s], 8);
    Eigen::MatrixXd jac(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) jac(i, j) = q[static_cast<std::size_t>(i)].derivative(e.q(j + 1))(pts[s]);
    }
    if (std::abs(jac.determinant()) < 1e-8) {
      throw DegenerateJacobianError("eigenvalues are not independent functions of q");
    }
  }
  return FibredTransform(n, std::move(q));
}

CheckReport verify_dn(const Tensor11& r, const FibredTransform& transform, const SampleSpec& spec) {
  require_dt_free(r);
  const Space& e = r.space();
  const int n = e.n();
  const Space j = Space::phase(n);
  const CoordinateChange& base = transform.base();
  const CoordinateChange& phase = transform.phase();

  CheckReport report;
  report.suite = "darboux";
  report.seed = spec.seed;
  report.points = spec.points;
  report.tolerance = kProceduralTolerance;

  const Tensor11 rn = frame_components(r, base);
  std::vector<ScalarField> diag_grad;
  for (int i = 1; i <= n; ++i) {
    for (int m = 0; m < e.dim(); ++m) diag_grad.push_back(rn(i, i).derivative(m));
  }

  report.add("diagonal", "R = sum_i lambda_i dQ^i (x) d/dQ^i", e, spec, [&](std::span<const double> x) {
    double m = 0.0;
    for (int a = 0; a < e.dim(); ++a) {
      for (int b = 0; b < e.dim(); ++b) {
        if (a == b && a != 0) continue;
        m = std::max(m, std::abs(rn(a, b)(x)));
      }
    }
    return m;
  });

  report.add("eigenvalue-locality", "d lambda_i / d(t, Q^j) = 0 for j != i", e, spec, [&](std::span<const double> x) {
    const Eigen::MatrixXd jinv = base.jacobian_at(x).inverse();
    double m = 0.0;
    for (int i = 1; i <= n; ++i) {
      for (int b = 0; b < e.dim(); ++b) {
        if (b == i) continue;
        double acc = 0.0;
        for (int a = 0; a < e.dim(); ++a) {
          acc += diag_grad[static_cast<std::size_t>((i - 1) * e.dim() + a)](x) * jinv(a, b);
        }
        m = std::max(m, std::abs(acc));
      }
    }
    return m;
  });

  const Tensor11 rt = complete_lift_tensor11(r);
  std::vector<ScalarField> diag_j;
  for (int i = 1; i <= n; ++i) diag_j.push_back(rn(i, i).pulled_back_to(j));
  report.add("lifted-diagonal", "lift(R) = sum_i lambda_i (dQ^i (x) d/dQ^i + dP_i (x) d/dP_i)", j, spec,
             [&](std::span<const double> z) {
               const Eigen::MatrixXd jf = phase.jacobian_at(z);
               Eigen::MatrixXd m(j.dim(), j.dim());
               for (int a = 0; a < j.dim(); ++a) {
                 for (int b = 0; b < j.dim(); ++b) m(a, b) = rt(a, b)(z);
               }
               Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(j.dim(), j.dim());
               for (int i = 1; i <= n; ++i) {
                 const double lam = diag_j[static_cast<std::size_t>(i - 1)](z);
                 expected(j.q(i), j.q(i)) = lam;
                 expected(j.p(i), j.p(i)) = lam;
               }
               const Eigen::MatrixXd got = jf * m * jf.inverse();
               return (got - expected).cwiseAbs().maxCoeff();
             });

  const Bivector lambda = canonical_poisson(n);
  Eigen::MatrixXd canon(j.dim(), j.dim());
  for (int a = 0; a < j.dim(); ++a) {
    for (int b = 0; b < j.dim(); ++b) canon(a, b) = lambda(a, b).expr().constant_value();
  }
  report.add("canonical-poisson", "Lambda = sum_i d/dQ^i ^ d/dP_i", j, spec, [&](std::span<const double> z) {
    const Eigen::MatrixXd jf = phase.jacobian_at(z);
    return (jf * canon * jf.transpose() - canon).cwiseAbs().maxCoeff();
  });
  return report;
}

}  // namespace jetlift
