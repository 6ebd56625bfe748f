#include <cmath>
#include <vector>

#include "doctest.h"
#include "jetlift/darboux.hpp"
#include "jetlift/errors.hpp"
#include "support.hpp"

using namespace jetlift;
using namespace support;

namespace {

const Space E1 = Space::base(1);
const Space E2 = Space::base(2);

/// u d/du (x) du + (v + 3) d/dv (x) dv pushed through q1 = u + t v, q2 = v.
Tensor11 pushed() {
  return named_matrix(E2, {{"q1,t", "-(q1 - t*q2)*q2"},
                           {"q1,q1", "q1 - t*q2"},
                           {"q1,q2", "t*(q2 + 3 - q1 + t*q2)"},
                           {"q2,q2", "q2 + 3"}});
}

/// Eigenvalues stay apart (u < v + 3) on this box.
SampleSpec near_example() {
  SampleSpec s;
  s.points = 32;
  s.box = {{0.75, 1.25}, {4.75, 5.25}, {1.75, 2.25}};
  return s;
}

FibredTransform analytic() {
  return FibredTransform(2, {f(E2, "q1 - t*q2"), f(E2, "q2 + 3")},
                         std::vector<ScalarField>{f(E2, "q1 + t*(q2 - 3)"), f(E2, "q2 - 3")});
}

bool check_passed(const CheckReport& r, const std::string& id) {
  for (const auto& c : r.results) {
    if (c.id == id) return c.passed;
  }
  FAIL("missing check " << id);
  return false;
}

}  // namespace

TEST_CASE("the hidden eigenvalues are u and v + 3") {
  // Pushing the diagonal tensor through the transform reproduces the tensor used here.
  const Tensor11 r0 = matrix(E2, {{1, 1, "q1"}, {2, 2, "q2 + 3"}});
  const FibredTransform back(2, {f(E2, "q1 + t*q2"), f(E2, "q2")}, std::vector<ScalarField>{f(E2, "q1 - t*q2"), f(E2, "q2")});
  CHECK(max_residual(E2, difference(transform(r0, back.base()), pushed())) < 1e-12);
}

TEST_CASE("eigen analysis") {
  const std::vector<double> pt{1.0, 5.0, 2.0};
  const EigenData ed = eigen_analysis(pushed(), pt);
  REQUIRE(ed.eigenvalues.size() == 2);
  CHECK(std::abs(ed.eigenvalues[0] - 3.0) < 1e-12);
  CHECK(std::abs(ed.eigenvalues[1] - 5.0) < 1e-12);
  CHECK(ed.lambda0 == 0.0);
  CHECK(ed.reconstruction_residual < 1e-10);
  CHECK((ed.left * ed.right - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  const EigenData one = eigen_analysis(matrix(E1, {{1, 1, "q1"}}), std::vector<double>{0.0, 7.0});
  CHECK(one.eigenvalues == std::vector<double>{7.0});
}

TEST_CASE("unusable spectra are rejected") {
  const std::vector<double> pt{0.3, 0.2, -0.4};
  CHECK_THROWS_AS(eigen_analysis(matrix(E2, {{1, 2, "-1"}, {2, 1, "1"}}), pt), EigenError);
  CHECK_THROWS_AS(eigen_analysis(matrix(E2, {{1, 1, "2"}, {2, 2, "2"}}), pt), EigenError);
  CHECK_THROWS_AS(eigen_analysis(matrix(E2, {{1, 1, "1"}, {1, 2, "1"}, {2, 2, "1"}}), pt), EigenError);
  CHECK_THROWS_AS(eigen_analysis(matrix(E2, {{1, 1, "1"}, {0, 1, "1"}}), pt), PreconditionError);
}

TEST_CASE("eigenvalue fields and their gradients") {
  const Tensor11 r = pushed();
  const ScalarField l1 = eigenvalue_field(r, 1);
  const ScalarField l2 = eigenvalue_field(r, 2);
  const ScalarField u = f(E2, "q1 - t*q2");
  const ScalarField v3 = f(E2, "q2 + 3");
  const SampleSpec spec = near_example();
  CHECK(sample_max(E2, spec, difference(l1, u)).max_residual < 1e-10);
  CHECK(sample_max(E2, spec, difference(l2, v3)).max_residual < 1e-10);
  for (int a = 0; a < 3; ++a) {
    CHECK(sample_max(E2, spec, difference(l1.derivative(a), u.derivative(a))).max_residual < 1e-9);
    CHECK(sample_max(E2, spec, difference(l2.derivative(a), v3.derivative(a))).max_residual < 1e-9);
    for (int b = 0; b < 3; ++b) {
      CHECK(sample_max(E2, spec, difference(l1.derivative(a).derivative(b), u.derivative(a).derivative(b))).max_residual <
            1e-6);
    }
  }
}

TEST_CASE("darboux-nijenhuis coordinates for the pushed example") {
  const Tensor11 r = pushed();
  const SampleSpec spec = near_example();
  const FibredTransform tr = build_dn_transform(r, spec);
  const auto y = tr.base().forward_point(std::vector<double>{1.0, 5.0, 2.0});
  CHECK(std::abs(y[1] - 3.0) < 1e-8);
  CHECK(std::abs(y[2] - 5.0) < 1e-8);
  const FibredTransform exact = analytic();
  for (int i = 1; i <= 2; ++i) {
    const auto& built = tr.base().forward()[static_cast<std::size_t>(i)];
    const auto& want = exact.base().forward()[static_cast<std::size_t>(i)];
    CHECK(sample_max(E2, spec, difference(built, want)).max_residual < 1e-8);
  }

  const CheckReport report = verify_dn(r, tr, spec);
  CHECK(report.tolerance == kProceduralTolerance);
  CHECK(report.all_passed());
  CHECK(verify_dn(r, exact, spec).all_passed());
}

TEST_CASE("darboux-nijenhuis coordinates in easy and failing cases") {
  SampleSpec spec;
  spec.points = 16;
  const Tensor11 diag = matrix(E1, {{1, 1, "q1"}});
  const FibredTransform tr = build_dn_transform(diag, spec);
  CHECK(sample_max(E1, spec, difference(tr.base().forward()[1], f(E1, "q1"))).max_residual < 1e-12);
  CHECK(verify_dn(diag, FibredTransform(1, {f(E1, "q1")}, std::vector<ScalarField>{f(E1, "q1")}), spec).all_passed());

  CHECK_THROWS_AS(build_dn_transform(matrix(E1, {{1, 1, "2"}}), spec), DegenerateJacobianError);
  CHECK_THROWS_AS(build_dn_transform(matrix(E1, {{1, 1, "q1"}, {1, 0, "t"}}), spec), TorsionNonzeroError);
  // The box straddles u = v + 3, where the ascending labels swap.
  SampleSpec crossing = spec;
  crossing.box = {{0.75, 1.25}, {6.0, 8.0}, {1.75, 2.25}};
  CHECK_THROWS_AS(build_dn_transform(pushed(), crossing), EigenError);
}

TEST_CASE("a wrong transform fails the diagonal check") {
  const FibredTransform wrong(2, {f(E2, "q1"), f(E2, "q2 + 3")}, std::vector<ScalarField>{f(E2, "q1"), f(E2, "q2 - 3")});
  const CheckReport report = verify_dn(pushed(), wrong, near_example());
  CHECK_FALSE(report.all_passed());
  CHECK_FALSE(check_passed(report, "diagonal"));
}
