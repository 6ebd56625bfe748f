#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jetlift {

/// Denominator guard: divisions by (and logs of) magnitudes below this raise SingularPointError.
inline constexpr double kSingularGuard = 1e-6;

/// Step for central differences of analytic gradients of procedural functions.
inline constexpr double kProceduralStep = 1e-5;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const noexcept { return den == 1; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator-(const Rational& a, const Rational& b);

/// A function known only through point evaluations of its value and analytic gradient.
/// Second derivatives are taken by central differences of the gradient.
class ProceduralFunction {
 public:
  virtual ~ProceduralFunction() = default;
  virtual std::size_t arity() const = 0;
  /// Returns the value at x and writes the gradient (length arity()).
  virtual double evaluate(std::span<const double> x, std::span<double> gradient) const = 0;
  virtual std::string name() const = 0;
};

enum class Op : std::uint8_t {
  Constant,
  Variable,
  Procedural,
  Neg,
  Sin,
  Cos,
  Exp,
  Log,
  Sqrt,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

struct Node;

/// Immutable expression DAG over indexed variables. Constructors fold constants and absorb 0/1.
class Expr {
 public:
  Expr();  // the constant 0

  static Expr constant(double value);
  static Expr variable(int index);
  /// Leaf evaluating `fn` with input slot k fed by variable `args[k]`.
  static Expr procedural(std::shared_ptr<const ProceduralFunction> fn, std::vector<int> args);

  Op op() const noexcept;
  bool is_constant() const noexcept;
  bool is_constant(double value) const noexcept;
  bool is_zero() const noexcept { return is_constant(0.0); }
  bool is_one() const noexcept { return is_constant(1.0); }
  double constant_value() const;
  int variable_index() const;
  bool contains_procedural() const noexcept;
  std::size_t hash() const noexcept;
  /// Number of nodes in the fully expanded tree (shared subtrees counted each time).
  std::size_t tree_size() const noexcept;

  double evaluate(std::span<const double> point) const;
  Expr derivative(int variable) const;
  /// Replaces variable k by replacements[k]. Procedural leaves cannot be substituted into.
  Expr substitute(std::span<const Expr> replacements) const;
  /// Renames variable k to var_map[k].
  Expr remap(std::span<const int> var_map) const;
  std::string to_string(std::span<const std::string> names) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, Rational exponent);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
  friend Expr exp(const Expr& a);
  friend Expr log(const Expr& a);
  friend Expr sqrt(const Expr& a);

  friend bool structurally_equal(const Expr& a, const Expr& b) noexcept;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct NodeBuilder;
};

/// Parses the expression DSL; identifiers must be among `names` (variable k = names[k]).
Expr parse_expression(std::string_view source, std::span<const std::string> names);

}  // namespace jetlift
