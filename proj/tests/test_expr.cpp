#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "jetlift/errors.hpp"
#include "jetlift/scalar_field.hpp"

using namespace jetlift;

namespace {

class Quadratic final : public ProceduralFunction {
 public:
  std::size_t arity() const override { return 2; }
  double evaluate(std::span<const double> x, std::span<double> g) const override {
    g[0] = 2.0 * x[0] * x[1];
    g[1] = x[0] * x[0];
    return x[0] * x[0] * x[1];
  }
  std::string name() const override { return "quad"; }
};

}  // namespace

TEST_CASE("parse and evaluate on phase space") {
  const Space j = Space::phase(1);
  const auto f = ScalarField::parse("p1*q1", j);
  const std::vector<double> pt{0.0, 2.0, 3.0};
  CHECK(f(pt) == doctest::Approx(6.0));
}

TEST_CASE("operator precedence around powers") {
  const Space e = Space::base(1);
  const std::vector<double> pt{0.5, 3.0};
  CHECK(ScalarField::parse("-q1^2", e)(pt) == doctest::Approx(-9.0));
  CHECK(ScalarField::parse("(-q1)^2", e)(pt) == doctest::Approx(9.0));
  CHECK(ScalarField::parse("2*-q1^2", e)(pt) == doctest::Approx(-18.0));
  CHECK(ScalarField::parse("-2^2 + t", e)(pt) == doctest::Approx(-3.5));
  CHECK(ScalarField::parse("q1^-1", e)(pt) == doctest::Approx(1.0 / 3.0));
  CHECK(ScalarField::parse("q1^2/2", e)(pt) == doctest::Approx(4.5));
  CHECK(ScalarField::parse("q1^(1/2)", e)(pt) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("symbolic derivative") {
  const Space e = Space::base(1);
  const auto f = ScalarField::parse("q1^2*t", e);
  const std::vector<double> pt{3.0, 2.0};
  CHECK(differentiate(f, "q1")(pt) == doctest::Approx(12.0));
  CHECK(f.derivative("t").derivative("q1").derivative("q1")(pt) == doctest::Approx(2.0));
}

TEST_CASE("singular denominators and domain errors") {
  const Space e = Space::base(1);
  const auto f = ScalarField::parse("q1/t", e);
  const std::vector<double> near{1e-9, 1.0};
  CHECK_THROWS_AS(f(near), SingularPointError);
  CHECK_THROWS_AS(ScalarField::parse("log(q1)", e)(std::vector<double>{0.0, -1.0}), DomainError);
  CHECK_THROWS_AS(ScalarField::parse("sqrt(q1)", e)(std::vector<double>{0.0, -1.0}), DomainError);
  CHECK_THROWS_AS(ScalarField::parse("q1^(-2)", e)(std::vector<double>{0.0, 1e-8}), SingularPointError);
  CHECK(ScalarField::parse("q1^(1/3)", e)(std::vector<double>{0.0, -8.0}) == doctest::Approx(-2.0));
}

TEST_CASE("parser errors") {
  const Space e = Space::base(1);
  CHECK_THROWS_AS(ScalarField::parse("q1 + foo", e), UnknownIdentifierError);
  CHECK_THROWS_AS(ScalarField::parse("q1^t", e), NonConstantExponentError);
  CHECK_THROWS_AS(ScalarField::parse("q1 +", e), ParseError);
  CHECK_THROWS_AS(ScalarField::parse("(q1", e), ParseError);
  CHECK_THROWS_AS(ScalarField::parse("p1", e), UnknownIdentifierError);
}

TEST_CASE("printer output re-parses to the same tree") {
  const Space j = Space::phase(2);
  const char* sources[] = {"p1*q1 + t^2", "-(q1 - q2)*p2", "sin(t)*exp(q1/(1 + q2^2))",
                           "q1^(1/2) - 3.5*t", "(q1 + q2)^(-1)", "cos(-t) - log(2 + q1^2)",
                           "p1 - (p2 - q1)", "q1/(q2/t)", "-q1^2"};
  for (const char* s : sources) {
    const auto f = ScalarField::parse(s, j);
    const auto g = ScalarField::parse(f.to_string(), j);
    INFO(s, " -> ", f.to_string());
    CHECK(structurally_equal(f.expr(), g.expr()));
  }
}

TEST_CASE("constant folding and absorption") {
  const Space e = Space::base(1);
  CHECK(ScalarField::parse("0*q1 + 0", e).is_zero());
  CHECK(ScalarField::parse("1*q1", e).to_string() == "q1");
  CHECK(ScalarField::parse("q1 - q1", e).is_zero());
  CHECK(ScalarField::parse("2*3 + 1", e).is_constant(7.0));
}

TEST_CASE("mixed partials commute and Leibniz holds on random points") {
  const Space j = Space::phase(2);
  const auto f = ScalarField::parse("sin(t*q1)*p2 + q2^3*exp(p1) - q1/(2 + q2^2)", j);
  const auto g = ScalarField::parse("cos(q1 + p2)*t + p1*q2", j);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(5);
    for (auto& v : x) v = u(rng);
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        CHECK(f.derivative(a).derivative(b)(x) == doctest::Approx(f.derivative(b).derivative(a)(x)).epsilon(1e-9));
      }
      const double lhs = (f * g).derivative(a)(x);
      const double rhs = f.derivative(a)(x) * g(x) + f(x) * g.derivative(a)(x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}

TEST_CASE("procedural leaves agree with the symbolic backend") {
  const Space e = Space::base(1);
  const auto sym = ScalarField::parse("t^2*q1", e);
  const auto proc = ScalarField::procedural(e, std::make_shared<Quadratic>());
  CHECK_FALSE(proc.is_symbolic());
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x{u(rng), u(rng)};
    CHECK(std::abs(proc(x) - sym(x)) < 1e-12);
    for (int a = 0; a < 2; ++a) {
      CHECK(std::abs(proc.derivative(a)(x) - sym.derivative(a)(x)) < 1e-10);
      for (int b = 0; b < 2; ++b) {
        CHECK(std::abs(proc.derivative(a).derivative(b)(x) - sym.derivative(a).derivative(b)(x)) < 1e-6);
      }
    }
  }
  CHECK_THROWS_AS(proc.derivative(0).derivative(1).derivative(0), DerivativeOrderError);
}

TEST_CASE("pullback to phase space keeps values") {
  const Space e = Space::base(2);
  const Space j = Space::phase(2);
  const auto f = ScalarField::parse("t*q1 + q2^2", e);
  const auto g = f.pulled_back_to(j);
  CHECK(g.space() == j);
  CHECK(g(std::vector<double>{1.0, 2.0, 3.0, 7.0, 8.0}) == doctest::Approx(11.0));
  CHECK_THROWS_AS(f(std::vector<double>{1.0, 2.0}), SpaceMismatchError);
}
