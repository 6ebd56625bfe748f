#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "jetlift/calculus.hpp"
#include "jetlift/space.hpp"
#include "jetlift/tensors.hpp"

namespace jetlift {

inline constexpr double kSymbolicTolerance = 1e-9;
inline constexpr double kProceduralTolerance = 1e-6;

/// Seeded random sampling over a box. Missing ranges default to [-2, 2].
struct SampleSpec {
  int points = 64;
  std::uint64_t seed = 0;
  std::vector<std::pair<double, double>> box;

  std::pair<double, double> range(int coordinate) const;
};

struct SampleResult {
  double max_residual = 0.0;
  std::vector<double> worst_point;
  int accepted = 0;
  int rejected = 0;
};

using ResidualFn = std::function<double(std::span<const double>)>;

/// Evaluates `residual` at spec.points accepted points. Points where evaluation raises
/// SingularPointError or DomainError are rejected and redrawn; more than 10 * points
/// rejections raise SamplingError.
SampleResult sample_max(const Space& space, const SampleSpec& spec, const ResidualFn& residual);

/// Draws points without any rejection test.
std::vector<std::vector<double>> draw_points(const Space& space, const SampleSpec& spec, int count);

double max_abs_difference(std::span<const ScalarField> a, std::span<const ScalarField> b,
                          std::span<const double> point);
double max_abs(std::span<const ScalarField> a, std::span<const double> point);

/// Pointwise residual between two objects of the same shape.
template <class T>
ResidualFn difference(const T& a, const T& b) {
  require_same_space(a.space(), b.space(), "comparison");
  return [a, b](std::span<const double> x) { return max_abs_difference(a.components(), b.components(), x); };
}

/// Pointwise magnitude of one object.
template <class T>
ResidualFn magnitude(const T& a) {
  return [a](std::span<const double> x) { return max_abs(a.components(), x); };
}

inline ResidualFn difference(const ScalarField& a, const ScalarField& b) {
  require_same_space(a.space(), b.space(), "comparison");
  return [a, b](std::span<const double> x) { return std::abs(a(x) - b(x)); };
}

inline ResidualFn max_of(std::vector<ResidualFn> parts) {
  return [parts = std::move(parts)](std::span<const double> x) {
    double m = 0.0;
    for (const auto& f : parts) m = std::max(m, f(x));
    return m;
  };
}

/// True when any component of the objects involved carries a procedural leaf.
bool any_procedural(std::span<const ScalarField> fields);

enum class Expectation { Zero, NonZero };

struct CheckResult {
  std::string id;
  /// Formula being checked.
  std::string ref;
  double max_residual = 0.0;
  std::vector<double> worst_point;
  double tolerance = kSymbolicTolerance;
  /// Zero: passes when the maximum stays below tolerance. NonZero: passes when it exceeds it.
  Expectation expectation = Expectation::Zero;
  bool passed = false;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  int points = 0;
  double tolerance = kSymbolicTolerance;
  std::vector<CheckResult> results;
  /// Free-form annotations such as a verdict.
  std::vector<std::pair<std::string, std::string>> notes;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  /// Samples `residual` and records a result that passes when the maximum stays below tolerance.
  const CheckResult& add(const std::string& id, const std::string& ref, const Space& space,
                         const SampleSpec& spec, const ResidualFn& residual,
                         Expectation expectation = Expectation::Zero);
  void add(CheckResult result);
};

}  // namespace jetlift
