#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jetlift/errors.hpp"
#include "jetlift/scalar_field.hpp"
#include "jetlift/space.hpp"

namespace jetlift {

// Component containers. Every tensor is stored in full index form over all coordinates of
// its space; block structure (vertical, R(dt) = 0, ...) is checked by predicates.

template <class Tag>
class FieldVector {
 public:
  FieldVector(Space space, std::vector<ScalarField> components)
      : space_(std::move(space)), components_(std::move(components)) {
    if (components_.size() != static_cast<std::size_t>(space_.dim())) {
      throw SpaceMismatchError("expected " + std::to_string(space_.dim()) + " components on " +
                               space_.to_string());
    }
    for (const auto& c : components_) require_same_space(space_, c.space(), "component");
  }

  static FieldVector zero(const Space& space) {
    return FieldVector(space, std::vector<ScalarField>(static_cast<std::size_t>(space.dim()),
                                                       ScalarField::constant(space, 0.0)));
  }

  /// The coordinate basis element with index `a` (d/dx^a or dx^a).
  static FieldVector basis(const Space& space, int a) {
    FieldVector v = zero(space);
    v.components_.at(static_cast<std::size_t>(a)) = ScalarField::constant(space, 1.0);
    return v;
  }

  const Space& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  const ScalarField& operator[](int a) const { return components_.at(static_cast<std::size_t>(a)); }
  const std::vector<ScalarField>& components() const noexcept { return components_; }

  /// Reinterprets a field on BaseE (or PhaseJ) as one on a larger space whose first
  /// coordinates agree, padding the new directions with zero. Pullback for forms,
  /// coordinate inclusion for vectors.
  FieldVector extended_to(const Space& target) const {
    std::vector<ScalarField> out(static_cast<std::size_t>(target.dim()),
                                 ScalarField::constant(target, 0.0));
    const std::vector<int> map = pullback_map(space_, target);
    for (int a = 0; a < dim(); ++a) {
      out[static_cast<std::size_t>(map[static_cast<std::size_t>(a)])] =
          components_[static_cast<std::size_t>(a)].pulled_back_to(target);
    }
    return FieldVector(target, std::move(out));
  }

 private:
  Space space_;
  std::vector<ScalarField> components_;
};

struct VectorTag {};
struct OneFormTag {};

/// Components X^a of X = X^a d/dx^a.
using VectorField = FieldVector<VectorTag>;
/// Components a_a of a = a_a dx^a.
using OneForm = FieldVector<OneFormTag>;

template <class Tag>
class FieldMatrix {
 public:
  FieldMatrix(Space space, std::vector<ScalarField> entries)
      : space_(std::move(space)), entries_(std::move(entries)) {
    const auto d = static_cast<std::size_t>(space_.dim());
    if (entries_.size() != d * d) {
      throw SpaceMismatchError("expected " + std::to_string(d * d) + " entries on " + space_.to_string());
    }
    for (const auto& c : entries_) require_same_space(space_, c.space(), "entry");
  }

  static FieldMatrix zero(const Space& space) {
    const auto d = static_cast<std::size_t>(space.dim());
    return FieldMatrix(space, std::vector<ScalarField>(d * d, ScalarField::constant(space, 0.0)));
  }

  static FieldMatrix identity(const Space& space) {
    FieldMatrix m = zero(space);
    for (int a = 0; a < space.dim(); ++a) m.set(a, a, ScalarField::constant(space, 1.0));
    return m;
  }

  const Space& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  const ScalarField& operator()(int a, int b) const { return entries_.at(index(a, b)); }
  void set(int a, int b, ScalarField value) {
    require_same_space(space_, value.space(), "entry");
    entries_.at(index(a, b)) = std::move(value);
  }
  const std::vector<ScalarField>& components() const noexcept { return entries_; }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(space_.dim()) + static_cast<std::size_t>(b);
  }

  Space space_;
  std::vector<ScalarField> entries_;
};

struct Tensor11Tag {};
struct Tensor02Tag {};
struct TwoFormTag {};
struct BivectorTag {};

/// Entry (a, b) is the coefficient of d/dx^a (x) dx^b.
using Tensor11 = FieldMatrix<Tensor11Tag>;
/// General covariant 2-tensor; entry (a, b) = B(d/dx^a, d/dx^b).
using Tensor02 = FieldMatrix<Tensor02Tag>;
/// w = 1/2 w_ab dx^a ^ dx^b with w_ab = -w_ba; entry (a, b) = w(d/dx^a, d/dx^b).
using TwoForm = FieldMatrix<TwoFormTag>;
/// Entry (a, b) = L(dx^a, dx^b), antisymmetric.
using Bivector = FieldMatrix<BivectorTag>;

/// Entry (a, b, c) is the coefficient of d/dx^a (x) dx^b (x) dx^c.
class Tensor12 {
 public:
  Tensor12(Space space, std::vector<ScalarField> entries);
  static Tensor12 zero(const Space& space);

  const Space& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  const ScalarField& operator()(int a, int b, int c) const { return entries_.at(index(a, b, c)); }
  void set(int a, int b, int c, ScalarField value);
  const std::vector<ScalarField>& components() const noexcept { return entries_; }

 private:
  std::size_t index(int a, int b, int c) const;

  Space space_;
  std::vector<ScalarField> entries_;
};

// ---------------------------------------------------------------------------
// Linear combinations

template <class Tag>
FieldVector<Tag> operator+(const FieldVector<Tag>& x, const FieldVector<Tag>& y) {
  require_same_space(x.space(), y.space(), "sum");
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (int a = 0; a < x.dim(); ++a) out.push_back(x[a] + y[a]);
  return FieldVector<Tag>(x.space(), std::move(out));
}

template <class Tag>
FieldVector<Tag> operator-(const FieldVector<Tag>& x, const FieldVector<Tag>& y) {
  require_same_space(x.space(), y.space(), "difference");
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (int a = 0; a < x.dim(); ++a) out.push_back(x[a] - y[a]);
  return FieldVector<Tag>(x.space(), std::move(out));
}

template <class Tag>
FieldVector<Tag> operator*(const ScalarField& f, const FieldVector<Tag>& x) {
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (int a = 0; a < x.dim(); ++a) out.push_back(f * x[a]);
  return FieldVector<Tag>(x.space(), std::move(out));
}

template <class Tag>
FieldVector<Tag> operator-(const FieldVector<Tag>& x) {
  return ScalarField::constant(x.space(), -1.0) * x;
}

template <class Tag>
FieldMatrix<Tag> operator+(const FieldMatrix<Tag>& x, const FieldMatrix<Tag>& y) {
  require_same_space(x.space(), y.space(), "sum");
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (std::size_t k = 0; k < x.components().size(); ++k) out.push_back(x.components()[k] + y.components()[k]);
  return FieldMatrix<Tag>(x.space(), std::move(out));
}

template <class Tag>
FieldMatrix<Tag> operator-(const FieldMatrix<Tag>& x, const FieldMatrix<Tag>& y) {
  require_same_space(x.space(), y.space(), "difference");
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (std::size_t k = 0; k < x.components().size(); ++k) out.push_back(x.components()[k] - y.components()[k]);
  return FieldMatrix<Tag>(x.space(), std::move(out));
}

template <class Tag>
FieldMatrix<Tag> operator*(const ScalarField& f, const FieldMatrix<Tag>& x) {
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (const auto& c : x.components()) out.push_back(f * c);
  return FieldMatrix<Tag>(x.space(), std::move(out));
}

template <class Tag>
FieldMatrix<Tag> operator-(const FieldMatrix<Tag>& x) {
  return ScalarField::constant(x.space(), -1.0) * x;
}

Tensor12 operator+(const Tensor12& x, const Tensor12& y);
Tensor12 operator-(const Tensor12& x, const Tensor12& y);

/// Reinterprets the entries of one matrix-shaped tensor as another kind.
template <class To, class From>
FieldMatrix<To> retag(const FieldMatrix<From>& m) {
  return FieldMatrix<To>(m.space(), m.components());
}

// ---------------------------------------------------------------------------
// Structural predicates (exact, after constant folding)

/// <X, dt> is identically zero.
bool is_vertical(const VectorField& x);
/// <X, dt> is identically one.
bool is_time_normalized(const VectorField& x);
/// The d/dt row vanishes, i.e. R(dt) = 0.
bool annihilates_dt(const Tensor11& r);

/// Builds a two-form from its entries w_ab with a < b; the lower triangle is filled by
/// antisymmetry.
TwoForm two_form_from_upper(const Space& space, const std::vector<std::pair<std::pair<int, int>, ScalarField>>& upper);

}  // namespace jetlift
