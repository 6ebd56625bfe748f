#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetlift/check.hpp"
#include "jetlift/tensors.hpp"

namespace support {

using namespace jetlift;

inline ScalarField f(const Space& s, const std::string& src) { return ScalarField::parse(src, s); }

inline VectorField vec(const Space& s, std::initializer_list<const char*> comps) {
  std::vector<ScalarField> c;
  for (const char* x : comps) c.push_back(f(s, x));
  return VectorField(s, std::move(c));
}

inline OneForm form(const Space& s, std::initializer_list<const char*> comps) {
  std::vector<ScalarField> c;
  for (const char* x : comps) c.push_back(f(s, x));
  return OneForm(s, std::move(c));
}

/// Entries given as {row, col, expression}.
struct Entry {
  int a;
  int b;
  const char* src;
};

template <class M = Tensor11>
M matrix(const Space& s, std::initializer_list<Entry> entries) {
  M m = M::zero(s);
  for (const auto& e : entries) m.set(e.a, e.b, f(s, e.src));
  return m;
}

inline TwoForm two_form(const Space& s, std::initializer_list<Entry> upper) {
  TwoForm w = TwoForm::zero(s);
  for (const auto& e : upper) {
    w.set(e.a, e.b, f(s, e.src));
    w.set(e.b, e.a, -f(s, e.src));
  }
  return w;
}

/// Components keyed by coordinate name ("q1") or name pair ("q1,p1").
struct Named {
  const char* key;
  const char* src;
};

inline int index_named(const Space& s, const std::string& name) {
  const auto k = s.index_of(name);
  if (!k) throw std::invalid_argument("no coordinate " + name);
  return *k;
}

template <class V>
V named_vector(const Space& s, const std::vector<Named>& comps) {
  std::vector<ScalarField> c(static_cast<std::size_t>(s.dim()), ScalarField::constant(s, 0.0));
  for (const auto& e : comps) c[static_cast<std::size_t>(index_named(s, e.key))] = f(s, e.src);
  return V(s, std::move(c));
}

template <class M = Tensor11>
M named_matrix(const Space& s, const std::vector<Named>& entries) {
  M m = M::zero(s);
  for (const auto& e : entries) {
    const std::string key = e.key;
    const auto comma = key.find(',');
    m.set(index_named(s, key.substr(0, comma)), index_named(s, key.substr(comma + 1)), f(s, e.src));
  }
  return m;
}

inline double max_residual(const Space& s, const ResidualFn& r, int points = 64, std::uint64_t seed = 0) {
  SampleSpec spec;
  spec.points = points;
  spec.seed = seed;
  return sample_max(s, spec, r).max_residual;
}

}  // namespace support
