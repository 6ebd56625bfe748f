#include "jetlift/tensors.hpp"

namespace jetlift {

Tensor12::Tensor12(Space space, std::vector<ScalarField> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  const auto d = static_cast<std::size_t>(space_.dim());
  if (entries_.size() != d * d * d) {
    throw SpaceMismatchError("expected " + std::to_string(d * d * d) + " entries on " + space_.to_string());
  }
  for (const auto& c : entries_) require_same_space(space_, c.space(), "entry");
}

Tensor12 Tensor12::zero(const Space& space) {
  const auto d = static_cast<std::size_t>(space.dim());
  return Tensor12(space, std::vector<ScalarField>(d * d * d, ScalarField::constant(space, 0.0)));
}

void Tensor12::set(int a, int b, int c, ScalarField value) {
  require_same_space(space_, value.space(), "entry");
  entries_.at(index(a, b, c)) = std::move(value);
}

std::size_t Tensor12::index(int a, int b, int c) const {
  const auto d = static_cast<std::size_t>(space_.dim());
  return (static_cast<std::size_t>(a) * d + static_cast<std::size_t>(b)) * d + static_cast<std::size_t>(c);
}

Tensor12 operator+(const Tensor12& x, const Tensor12& y) {
  require_same_space(x.space(), y.space(), "sum");
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (std::size_t k = 0; k < x.components().size(); ++k) out.push_back(x.components()[k] + y.components()[k]);
  return Tensor12(x.space(), std::move(out));
}

Tensor12 operator-(const Tensor12& x, const Tensor12& y) {
  require_same_space(x.space(), y.space(), "difference");
  std::vector<ScalarField> out;
  out.reserve(x.components().size());
  for (std::size_t k = 0; k < x.components().size(); ++k) out.push_back(x.components()[k] - y.components()[k]);
  return Tensor12(x.space(), std::move(out));
}

bool is_vertical(const VectorField& x) { return x[Space::t()].is_zero(); }

bool is_time_normalized(const VectorField& x) { return x[Space::t()].is_constant(1.0); }

bool annihilates_dt(const Tensor11& r) {
  for (int b = 0; b < r.dim(); ++b) {
    if (!r(Space::t(), b).is_zero()) return false;
  }
  return true;
}

TwoForm two_form_from_upper(const Space& space,
                            const std::vector<std::pair<std::pair<int, int>, ScalarField>>& upper) {
  TwoForm w = TwoForm::zero(space);
  for (const auto& [ab, value] : upper) {
    const auto [a, b] = ab;
    if (a >= b) throw PreconditionError("two_form_from_upper expects a < b");
    w.set(a, b, value);
    w.set(b, a, -value);
  }
  return w;
}

}  // namespace jetlift
