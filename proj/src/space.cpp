#include "jetlift/space.hpp"

#include "jetlift/errors.hpp"

namespace jetlift {

Space::Space(SpaceKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw PreconditionError("space needs n >= 1, got " + std::to_string(n));
  names_.reserve(static_cast<std::size_t>(dim()));
  names_.emplace_back("t");
  for (int i = 1; i <= n; ++i) names_.push_back("q" + std::to_string(i));
  if (kind == SpaceKind::ExtendedT) names_.emplace_back("p0");
  if (kind != SpaceKind::BaseE) {
    for (int i = 1; i <= n; ++i) names_.push_back("p" + std::to_string(i));
  }
}

int Space::dim() const noexcept {
  switch (kind_) {
    case SpaceKind::BaseE:
      return n_ + 1;
    case SpaceKind::PhaseJ:
      return 2 * n_ + 1;
    case SpaceKind::ExtendedT:
      return 2 * n_ + 2;
  }
  return 0;
}

int Space::q(int i) const {
  if (i < 1 || i > n_) throw PreconditionError("q index out of range: " + std::to_string(i));
  return i;
}

int Space::p(int i) const {
  if (kind_ == SpaceKind::BaseE) throw PreconditionError("BaseE has no momentum coordinates");
  if (i < 1 || i > n_) throw PreconditionError("p index out of range: " + std::to_string(i));
  return kind_ == SpaceKind::PhaseJ ? n_ + i : n_ + 1 + i;
}

int Space::p0() const {
  if (kind_ != SpaceKind::ExtendedT) throw PreconditionError("only ExtendedT has p0");
  return n_ + 1;
}

std::optional<int> Space::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::string Space::to_string() const {
  switch (kind_) {
    case SpaceKind::BaseE:
      return "BaseE(" + std::to_string(n_) + ")";
    case SpaceKind::PhaseJ:
      return "PhaseJ(" + std::to_string(n_) + ")";
    case SpaceKind::ExtendedT:
      return "ExtendedT(" + std::to_string(n_) + ")";
  }
  return "?";
}

std::vector<int> pullback_map(const Space& source, const Space& target) {
  if (source.n() != target.n()) {
    throw SpaceMismatchError("cannot pull back " + source.to_string() + " to " + target.to_string());
  }
  std::vector<int> map(static_cast<std::size_t>(source.dim()));
  if (source == target) {
    for (int k = 0; k < source.dim(); ++k) map[static_cast<std::size_t>(k)] = k;
    return map;
  }
  if (source.kind() == SpaceKind::BaseE) {
    for (int k = 0; k <= source.n(); ++k) map[static_cast<std::size_t>(k)] = k;
    return map;
  }
  if (source.kind() == SpaceKind::PhaseJ && target.kind() == SpaceKind::ExtendedT) {
    for (int k = 0; k <= source.n(); ++k) map[static_cast<std::size_t>(k)] = k;
    for (int i = 1; i <= source.n(); ++i) map[static_cast<std::size_t>(source.p(i))] = target.p(i);
    return map;
  }
  throw SpaceMismatchError("no natural projection from " + target.to_string() + " to " +
                           source.to_string());
}

void require_same_space(const Space& a, const Space& b, std::string_view what) {
  if (!(a == b)) {
    throw SpaceMismatchError(std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace jetlift
