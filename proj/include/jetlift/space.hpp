#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetlift {

enum class SpaceKind {
  BaseE,      ///< (t, q1..qn)
  PhaseJ,     ///< (t, q1..qn, p1..pn), the dual of the first jet bundle
  ExtendedT,  ///< (t, q1..qn, p0, p1..pn), the cotangent bundle of E
};

/// A single global chart on one of the three spaces. Coordinate order is fixed:
/// t first, then q, then p0 (ExtendedT only), then p.
class Space {
 public:
  Space(SpaceKind kind, int n);

  static Space base(int n) { return {SpaceKind::BaseE, n}; }
  static Space phase(int n) { return {SpaceKind::PhaseJ, n}; }
  static Space extended(int n) { return {SpaceKind::ExtendedT, n}; }

  SpaceKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int dim() const noexcept;

  static constexpr int t() noexcept { return 0; }
  /// Index of q^i, i in 1..n.
  int q(int i) const;
  /// Index of p_i, i in 1..n (PhaseJ or ExtendedT).
  int p(int i) const;
  /// Index of p0 (ExtendedT only).
  int p0() const;

  bool has_momenta() const noexcept { return kind_ != SpaceKind::BaseE; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  std::optional<int> index_of(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const Space& a, const Space& b) noexcept {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  SpaceKind kind_;
  int n_;
  std::vector<std::string> names_;
};

/// Variable map for pulling functions back along the natural projections
/// (pi: PhaseJ/ExtendedT -> BaseE, rho: ExtendedT -> PhaseJ). Entry k is the index in
/// `target` of coordinate k of `source`. Throws SpaceMismatchError for any other pair.
std::vector<int> pullback_map(const Space& source, const Space& target);

void require_same_space(const Space& a, const Space& b, std::string_view what);

}  // namespace jetlift
