#include "jetlift/check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "jetlift/errors.hpp"

namespace jetlift {

std::pair<double, double> SampleSpec::range(int coordinate) const {
  const auto k = static_cast<std::size_t>(coordinate);
  if (k < box.size()) return box[k];
  return {-2.0, 2.0};
}

std::vector<std::vector<double>> draw_points(const Space& space, const SampleSpec& spec, int count) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::vector<double> x(static_cast<std::size_t>(space.dim()));
    for (int a = 0; a < space.dim(); ++a) {
      const auto [lo, hi] = spec.range(a);
      x[static_cast<std::size_t>(a)] = lo + (hi - lo) * unit(rng);
    }
    out.push_back(std::move(x));
  }
  return out;
}

SampleResult sample_max(const Space& space, const SampleSpec& spec, const ResidualFn& residual) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SampleResult result;
  std::vector<double> x(static_cast<std::size_t>(space.dim()));
  while (result.accepted < spec.points) {
    for (int a = 0; a < space.dim(); ++a) {
      const auto [lo, hi] = spec.range(a);
      x[static_cast<std::size_t>(a)] = lo + (hi - lo) * unit(rng);
    }
    double r = 0.0;
    try {
      r = residual(x);
    } catch (const SingularPointError&) {
      if (++result.rejected > 10 * spec.points) throw SamplingError("too many singular sample points");
      continue;
    } catch (const DomainError&) {
      if (++result.rejected > 10 * spec.points) throw SamplingError("too many sample points outside the domain");
      continue;
    }
    ++result.accepted;
    if (std::isnan(r)) r = INFINITY;
    if (result.worst_point.empty() || r > result.max_residual) {
      result.max_residual = r;
      result.worst_point = x;
    }
  }
  return result;
}

double max_abs_difference(std::span<const ScalarField> a, std::span<const ScalarField> b,
                          std::span<const double> point) {
  if (a.size() != b.size()) throw SpaceMismatchError("objects of different shape");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k](point) - b[k](point)));
  return m;
}

double max_abs(std::span<const ScalarField> a, std::span<const double> point) {
  double m = 0.0;
  for (const auto& f : a) m = std::max(m, std::abs(f(point)));
  return m;
}

bool any_procedural(std::span<const ScalarField> fields) {
  return std::any_of(fields.begin(), fields.end(), [](const ScalarField& f) { return !f.is_symbolic(); });
}

bool CheckReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult& CheckReport::add(const std::string& id, const std::string& ref, const Space& space,
                                    const SampleSpec& spec, const ResidualFn& residual,
                                    Expectation expectation) {
  const SampleResult s = sample_max(space, spec, residual);
  CheckResult r;
  r.id = id;
  r.ref = ref;
  r.max_residual = s.max_residual;
  r.worst_point = s.worst_point;
  r.tolerance = tolerance;
  r.expectation = expectation;
  r.passed = expectation == Expectation::Zero ? s.max_residual < tolerance : s.max_residual > tolerance;
  results.push_back(std::move(r));
  return results.back();
}

void CheckReport::add(CheckResult result) { results.push_back(std::move(result)); }

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["points"] = points;
  j["tolerance"] = tolerance;
  j["passed"] = all_passed();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["ref"] = r.ref;
    e["max_residual"] = r.max_residual;
    e["worst_point"] = r.worst_point;
    e["tolerance"] = r.tolerance;
    e["expect"] = r.expectation == Expectation::Zero ? "zero" : "nonzero";
    e["passed"] = r.passed;
    list.push_back(std::move(e));
  }
  j["results"] = std::move(list);
  if (!notes.empty()) {
    nlohmann::ordered_json n;
    for (const auto& [k, v] : notes) n[k] = v;
    j["notes"] = std::move(n);
  }
  return j;
}

}  // namespace jetlift
