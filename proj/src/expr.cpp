#include "jetlift/expr.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <cmath>
#include <cstring>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "jetlift/errors.hpp"

namespace jetlift {

// ---------------------------------------------------------------------------
// Rational

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::make(a.num * b.den - b.num * a.den, a.den * b.den);
}

// ---------------------------------------------------------------------------
// Node storage

using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Constant;
  double value = 0.0;
  int var = -1;
  Rational exponent{};
  NodePtr a;
  NodePtr b;
  std::shared_ptr<const ProceduralFunction> fn;
  std::vector<int> args;
  int d1 = -1;
  int d2 = -1;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool has_proc = false;
};

namespace {

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > SIZE_MAX - b ? SIZE_MAX : a + b;
}

void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

int order_of(const Node& n) { return (n.d1 >= 0 ? 1 : 0) + (n.d2 >= 0 ? 1 : 0); }

const char* function_name(Op op) {
  switch (op) {
    case Op::Sin:
      return "sin";
    case Op::Cos:
      return "cos";
    case Op::Exp:
      return "exp";
    case Op::Log:
      return "log";
    case Op::Sqrt:
      return "sqrt";
    default:
      return "";
  }
}

}  // namespace

struct NodeBuilder {
  static Expr wrap(Node&& node) {
    std::size_t h = static_cast<std::size_t>(node.op);
    std::uint64_t bits = 0;
    std::memcpy(&bits, &node.value, sizeof bits);
    hash_mix(h, static_cast<std::size_t>(bits));
    hash_mix(h, static_cast<std::size_t>(node.var + 1));
    hash_mix(h, static_cast<std::size_t>(node.exponent.num));
    hash_mix(h, static_cast<std::size_t>(node.exponent.den));
    node.size = 1;
    if (node.a) {
      hash_mix(h, node.a->hash);
      node.size = saturating_add(node.size, node.a->size);
      node.has_proc = node.has_proc || node.a->has_proc;
    }
    if (node.b) {
      hash_mix(h, node.b->hash);
      node.size = saturating_add(node.size, node.b->size);
      node.has_proc = node.has_proc || node.b->has_proc;
    }
    if (node.fn) {
      hash_mix(h, std::hash<const void*>{}(node.fn.get()));
      for (int arg : node.args) hash_mix(h, static_cast<std::size_t>(arg + 1));
      hash_mix(h, static_cast<std::size_t>(node.d1 + 1));
      hash_mix(h, static_cast<std::size_t>(node.d2 + 1));
      node.has_proc = true;
    }
    node.hash = h;
    return Expr(std::make_shared<const Node>(std::move(node)));
  }

  static const NodePtr& ptr(const Expr& e) { return e.node_; }
  static Expr from(NodePtr p) { return Expr(std::move(p)); }

  static Expr constant(double v) {
    Node n;
    n.op = Op::Constant;
    n.value = v;
    return wrap(std::move(n));
  }

  static Expr unary(Op op, const Expr& a, Rational exponent = {}) {
    Node n;
    n.op = op;
    n.a = a.node_;
    n.exponent = exponent;
    return wrap(std::move(n));
  }

  static Expr binary(Op op, const Expr& a, const Expr& b) {
    Node n;
    n.op = op;
    n.a = a.node_;
    n.b = b.node_;
    return wrap(std::move(n));
  }

  static Expr proc(std::shared_ptr<const ProceduralFunction> fn, std::vector<int> args, int d1,
                   int d2) {
    Node n;
    n.op = Op::Procedural;
    n.fn = std::move(fn);
    n.args = std::move(args);
    n.d1 = d1;
    n.d2 = d2;
    return wrap(std::move(n));
  }
};

namespace {

Expr child_a(const Node& n) { return NodeBuilder::from(n.a); }
Expr child_b(const Node& n) { return NodeBuilder::from(n.b); }

const Expr& zero_expr() {
  static const Expr zero = NodeBuilder::constant(0.0);
  return zero;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and simplification

Expr::Expr() : node_(NodeBuilder::ptr(zero_expr())) {}

Expr Expr::constant(double value) {
  if (value == 0.0) return zero_expr();  // also normalizes -0.0
  return NodeBuilder::constant(value);
}

Expr Expr::variable(int index) {
  if (index < 0) throw PreconditionError("negative variable index");
  Node n;
  n.op = Op::Variable;
  n.var = index;
  return NodeBuilder::wrap(std::move(n));
}

Expr Expr::procedural(std::shared_ptr<const ProceduralFunction> fn, std::vector<int> args) {
  if (!fn) throw PreconditionError("null procedural function");
  if (args.size() != fn->arity()) {
    throw SpaceMismatchError("procedural leaf '" + fn->name() + "' expects " +
                             std::to_string(fn->arity()) + " arguments");
  }
  return NodeBuilder::proc(std::move(fn), std::move(args), -1, -1);
}

Op Expr::op() const noexcept { return node_->op; }
bool Expr::is_constant() const noexcept { return node_->op == Op::Constant; }
bool Expr::is_constant(double value) const noexcept {
  return node_->op == Op::Constant && node_->value == value;
}
double Expr::constant_value() const {
  if (!is_constant()) throw PreconditionError("expression is not a constant");
  return node_->value;
}
int Expr::variable_index() const {
  if (node_->op != Op::Variable) throw PreconditionError("expression is not a variable");
  return node_->var;
}
bool Expr::contains_procedural() const noexcept { return node_->has_proc; }
std::size_t Expr::hash() const noexcept { return node_->hash; }
std::size_t Expr::tree_size() const noexcept { return node_->size; }

bool structurally_equal(const Expr& x, const Expr& y) noexcept {
  const Node* a = x.node_.get();
  const Node* b = y.node_.get();
  if (a == b) return true;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  switch (a->op) {
    case Op::Constant:
      return a->value == b->value;
    case Op::Variable:
      return a->var == b->var;
    case Op::Procedural:
      return a->fn == b->fn && a->args == b->args && a->d1 == b->d1 && a->d2 == b->d2;
    default:
      break;
  }
  if (a->exponent != b->exponent) return false;
  if (!structurally_equal(child_a(*a), child_a(*b))) return false;
  if (a->b) return structurally_equal(child_b(*a), child_b(*b));
  return true;
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr::constant(-a.node_->value);
  if (a.op() == Op::Neg) return child_a(*a.node_);
  return NodeBuilder::unary(Op::Neg, a);
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.node_->value + b.node_->value);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (b.op() == Op::Neg) return a - child_a(*b.node_);
  if (a.op() == Op::Neg) return b - child_a(*a.node_);
  return NodeBuilder::binary(Op::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.node_->value - b.node_->value);
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (structurally_equal(a, b)) return Expr();
  if (b.op() == Op::Neg) return a + child_a(*b.node_);
  return NodeBuilder::binary(Op::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.node_->value * b.node_->value);
  if (a.is_zero() || b.is_zero()) return Expr();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_constant(-1.0)) return -b;
  if (b.is_constant(-1.0)) return -a;
  if (a.op() == Op::Neg && b.op() == Op::Neg) return child_a(*a.node_) * child_a(*b.node_);
  if (a.op() == Op::Neg) return -(child_a(*a.node_) * b);
  if (b.op() == Op::Neg) return -(a * child_a(*b.node_));
  if (b.is_constant()) return b * a;
  if (a.is_constant() && b.op() == Op::Mul && b.node_->a->op == Op::Constant) {
    return Expr::constant(a.node_->value * b.node_->a->value) * child_b(*b.node_);
  }
  return NodeBuilder::binary(Op::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_zero()) return Expr();
  if (b.is_one()) return a;
  if (b.is_constant(-1.0)) return -a;
  if (a.is_constant() && b.is_constant() && b.node_->value != 0.0) {
    return Expr::constant(a.node_->value / b.node_->value);
  }
  if (a.op() == Op::Neg) return -(child_a(*a.node_) / b);
  if (b.op() == Op::Neg) return -(a / child_a(*b.node_));
  return NodeBuilder::binary(Op::Div, a, b);
}

namespace {

// Real power with the conventions of the evaluator; returns false outside the real domain.
bool real_pow(double base, Rational r, double& out) {
  if (r.is_integer()) {
    out = std::pow(base, static_cast<double>(r.num));
    return true;
  }
  if (base >= 0.0) {
    out = std::pow(base, r.value());
    return true;
  }
  if (r.den % 2 == 0) return false;
  const double magnitude = std::pow(-base, r.value());
  out = (r.num % 2 == 0) ? magnitude : -magnitude;
  return true;
}

}  // namespace

Expr pow(const Expr& base, Rational exponent) {
  exponent = Rational::make(exponent.num, exponent.den);
  if (exponent.num == 0) return Expr::constant(1.0);
  if (exponent == Rational{1, 1}) return base;
  if (base.is_constant()) {
    const double v = base.node_->value;
    double out = 0.0;
    const bool singular = exponent.num < 0 && std::abs(v) < kSingularGuard;
    if (!singular && real_pow(v, exponent, out)) return Expr::constant(out);
  }
  return NodeBuilder::unary(Op::Pow, base, exponent);
}

Expr sin(const Expr& a) {
  if (a.is_constant()) return Expr::constant(std::sin(a.node_->value));
  return NodeBuilder::unary(Op::Sin, a);
}

Expr cos(const Expr& a) {
  if (a.is_constant()) return Expr::constant(std::cos(a.node_->value));
  return NodeBuilder::unary(Op::Cos, a);
}

Expr exp(const Expr& a) {
  if (a.is_constant()) return Expr::constant(std::exp(a.node_->value));
  return NodeBuilder::unary(Op::Exp, a);
}

Expr log(const Expr& a) {
  if (a.is_constant() && a.node_->value >= kSingularGuard) {
    return Expr::constant(std::log(a.node_->value));
  }
  return NodeBuilder::unary(Op::Log, a);
}

Expr sqrt(const Expr& a) {
  if (a.is_constant() && a.node_->value >= 0.0) return Expr::constant(std::sqrt(a.node_->value));
  return NodeBuilder::unary(Op::Sqrt, a);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double guard_denominator(double d) {
  if (std::abs(d) < kSingularGuard) {
    throw SingularPointError("denominator magnitude below guard");
  }
  return d;
}

double evaluate_procedural(const Node& n, std::span<const double> point) {
  const std::size_t arity = n.args.size();
  std::vector<double> x(arity);
  for (std::size_t k = 0; k < arity; ++k) {
    const auto index = static_cast<std::size_t>(n.args[k]);
    if (index >= point.size()) throw SpaceMismatchError("point too short for procedural leaf");
    x[k] = point[index];
  }
  std::vector<double> grad(arity);
  const int order = order_of(n);
  if (order == 0) return n.fn->evaluate(x, grad);
  if (order == 1) {
    n.fn->evaluate(x, grad);
    return grad[static_cast<std::size_t>(n.d1)];
  }
  const auto slot = static_cast<std::size_t>(n.d2);
  const double x0 = x[slot];
  x[slot] = x0 + kProceduralStep;
  n.fn->evaluate(x, grad);
  const double forward = grad[static_cast<std::size_t>(n.d1)];
  x[slot] = x0 - kProceduralStep;
  n.fn->evaluate(x, grad);
  const double backward = grad[static_cast<std::size_t>(n.d1)];
  return (forward - backward) / (2.0 * kProceduralStep);
}

// Shared subtrees are evaluated once when a cache is supplied.
using EvalCache = std::unordered_map<const Node*, double>;

double eval(const Node& n, std::span<const double> point, EvalCache* cache);

double eval_node(const Node& n, std::span<const double> point, EvalCache* cache) {
  switch (n.op) {
    case Op::Constant:
      return n.value;
    case Op::Variable:
      if (static_cast<std::size_t>(n.var) >= point.size()) {
        throw SpaceMismatchError("point has no coordinate " + std::to_string(n.var));
      }
      return point[static_cast<std::size_t>(n.var)];
    case Op::Procedural:
      return evaluate_procedural(n, point);
    case Op::Neg:
      return -eval(*n.a, point, cache);
    case Op::Sin:
      return std::sin(eval(*n.a, point, cache));
    case Op::Cos:
      return std::cos(eval(*n.a, point, cache));
    case Op::Exp:
      return std::exp(eval(*n.a, point, cache));
    case Op::Log: {
      const double v = eval(*n.a, point, cache);
      if (v < 0.0) throw DomainError("log of a negative number");
      if (v < kSingularGuard) throw SingularPointError("log argument below guard");
      return std::log(v);
    }
    case Op::Sqrt: {
      const double v = eval(*n.a, point, cache);
      if (v < 0.0) throw DomainError("sqrt of a negative number");
      return std::sqrt(v);
    }
    case Op::Add:
      return eval(*n.a, point, cache) + eval(*n.b, point, cache);
    case Op::Sub:
      return eval(*n.a, point, cache) - eval(*n.b, point, cache);
    case Op::Mul:
      return eval(*n.a, point, cache) * eval(*n.b, point, cache);
    case Op::Div: {
      const double num = eval(*n.a, point, cache);
      return num / guard_denominator(eval(*n.b, point, cache));
    }
    case Op::Pow: {
      const double base = eval(*n.a, point, cache);
      if (n.exponent.num < 0) guard_denominator(base);
      double out = 0.0;
      if (!real_pow(base, n.exponent, out)) {
        throw DomainError("fractional power of a negative number");
      }
      return out;
    }
  }
  return 0.0;
}

double eval(const Node& n, std::span<const double> point, EvalCache* cache) {
  if (cache == nullptr || n.size < 8) return eval_node(n, point, cache);
  if (auto it = cache->find(&n); it != cache->end()) return it->second;
  const double v = eval_node(n, point, cache);
  cache->emplace(&n, v);
  return v;
}

}  // namespace

double Expr::evaluate(std::span<const double> point) const {
  double v = 0.0;
  if (node_->size > 64) {
    EvalCache cache;
    v = eval(*node_, point, &cache);
  } else {
    v = eval(*node_, point, nullptr);
  }
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  return v;
}

// ---------------------------------------------------------------------------
// Differentiation, substitution, remapping

namespace {

using Memo = std::unordered_map<const Node*, Expr>;

Expr diff(const NodePtr& p, int v, Memo& memo) {
  const Node& n = *p;
  if (!n.has_proc && n.op == Op::Constant) return Expr();
  if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
  Expr self = NodeBuilder::from(p);
  Expr out;
  switch (n.op) {
    case Op::Constant:
      break;
    case Op::Variable:
      out = Expr::constant(n.var == v ? 1.0 : 0.0);
      break;
    case Op::Procedural: {
      const int order = order_of(n);
      for (std::size_t k = 0; k < n.args.size(); ++k) {
        if (n.args[k] != v) continue;
        if (order >= 2) {
          throw DerivativeOrderError("procedural field '" + n.fn->name() +
                                     "' supports derivatives of order <= 2 only");
        }
        const int slot = static_cast<int>(k);
        Expr leaf = order == 0 ? NodeBuilder::proc(n.fn, n.args, slot, -1)
                               : NodeBuilder::proc(n.fn, n.args, n.d1, slot);
        out = out + leaf;
      }
      break;
    }
    case Op::Neg:
      out = -diff(n.a, v, memo);
      break;
    case Op::Sin:
      out = cos(child_a(n)) * diff(n.a, v, memo);
      break;
    case Op::Cos:
      out = -(sin(child_a(n)) * diff(n.a, v, memo));
      break;
    case Op::Exp:
      out = self * diff(n.a, v, memo);
      break;
    case Op::Log:
      out = diff(n.a, v, memo) / child_a(n);
      break;
    case Op::Sqrt:
      out = diff(n.a, v, memo) / (Expr::constant(2.0) * self);
      break;
    case Op::Add:
      out = diff(n.a, v, memo) + diff(n.b, v, memo);
      break;
    case Op::Sub:
      out = diff(n.a, v, memo) - diff(n.b, v, memo);
      break;
    case Op::Mul:
      out = diff(n.a, v, memo) * child_b(n) + child_a(n) * diff(n.b, v, memo);
      break;
    case Op::Div: {
      const Expr num = child_a(n);
      const Expr den = child_b(n);
      out = diff(n.a, v, memo) / den - (num * diff(n.b, v, memo)) / (den * den);
      break;
    }
    case Op::Pow: {
      const Expr da = diff(n.a, v, memo);
      if (!da.is_zero()) {
        out = Expr::constant(n.exponent.value()) * pow(child_a(n), n.exponent - Rational{1, 1}) * da;
      }
      break;
    }
  }
  memo.emplace(p.get(), out);
  return out;
}

Expr rebuild(const Node& n, const Expr& a, const Expr& b) {
  switch (n.op) {
    case Op::Neg:
      return -a;
    case Op::Sin:
      return sin(a);
    case Op::Cos:
      return cos(a);
    case Op::Exp:
      return exp(a);
    case Op::Log:
      return log(a);
    case Op::Sqrt:
      return sqrt(a);
    case Op::Pow:
      return pow(a, n.exponent);
    case Op::Add:
      return a + b;
    case Op::Sub:
      return a - b;
    case Op::Mul:
      return a * b;
    case Op::Div:
      return a / b;
    default:
      throw PreconditionError("rebuild of a leaf node");
  }
}

template <class LeafFn>
Expr transform_tree(const NodePtr& p, Memo& memo, const LeafFn& leaf) {
  const Node& n = *p;
  if (n.op == Op::Constant) return NodeBuilder::from(p);
  if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
  Expr out;
  if (n.op == Op::Variable || n.op == Op::Procedural) {
    out = leaf(n);
  } else {
    const Expr a = transform_tree(n.a, memo, leaf);
    const Expr b = n.b ? transform_tree(n.b, memo, leaf) : Expr();
    out = rebuild(n, a, b);
  }
  memo.emplace(p.get(), out);
  return out;
}

}  // namespace

Expr Expr::derivative(int variable) const {
  Memo memo;
  return diff(node_, variable, memo);
}

Expr Expr::substitute(std::span<const Expr> replacements) const {
  Memo memo;
  return transform_tree(node_, memo, [&](const Node& n) -> Expr {
    if (n.op == Op::Procedural) {
      throw PreconditionError("cannot substitute into procedural field '" + n.fn->name() + "'");
    }
    if (static_cast<std::size_t>(n.var) >= replacements.size()) {
      throw SpaceMismatchError("no replacement for variable " + std::to_string(n.var));
    }
    return replacements[static_cast<std::size_t>(n.var)];
  });
}

Expr Expr::remap(std::span<const int> var_map) const {
  auto mapped = [&](int index) {
    if (static_cast<std::size_t>(index) >= var_map.size()) {
      throw SpaceMismatchError("no mapping for variable " + std::to_string(index));
    }
    return var_map[static_cast<std::size_t>(index)];
  };
  Memo memo;
  return transform_tree(node_, memo, [&](const Node& n) -> Expr {
    if (n.op == Op::Variable) return Expr::variable(mapped(n.var));
    std::vector<int> args = n.args;
    for (int& arg : args) arg = mapped(arg);
    return NodeBuilder::proc(n.fn, std::move(args), n.d1, n.d2);
  });
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_number(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

// 1: sums, 2: products, 3: powers, 4: atoms (anything printable as a grammar `base`).
int precedence(const Node& n) {
  switch (n.op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Constant:
      return n.value < 0.0 ? 0 : 4;
    case Op::Neg:
      return 0;
    case Op::Pow:
      return 3;
    default:
      return 4;
  }
}

void print(const Node& n, std::span<const std::string> names, std::string& out);

void print_wrapped(const Node& n, bool wrap, std::span<const std::string> names, std::string& out) {
  if (wrap) out += '(';
  print(n, names, out);
  if (wrap) out += ')';
}

void print(const Node& n, std::span<const std::string> names, std::string& out) {
  switch (n.op) {
    case Op::Constant:
      out += format_number(n.value);
      return;
    case Op::Variable:
      if (static_cast<std::size_t>(n.var) < names.size()) {
        out += names[static_cast<std::size_t>(n.var)];
      } else {
        out += "x" + std::to_string(n.var);
      }
      return;
    case Op::Procedural: {
      std::string name = n.fn->name();
      auto arg_name = [&](int slot) {
        const int var = n.args[static_cast<std::size_t>(slot)];
        return static_cast<std::size_t>(var) < names.size() ? names[static_cast<std::size_t>(var)]
                                                            : "x" + std::to_string(var);
      };
      if (n.d1 >= 0) name = "d" + arg_name(n.d1) + "(" + name + ")";
      if (n.d2 >= 0) name = "d" + arg_name(n.d2) + "(" + name + ")";
      out += name;
      return;
    }
    case Op::Neg:
      out += '-';
      print_wrapped(*n.a, precedence(*n.a) < 4, names, out);
      return;
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
    case Op::Log:
    case Op::Sqrt:
      out += function_name(n.op);
      out += '(';
      print(*n.a, names, out);
      out += ')';
      return;
    case Op::Pow:
      print_wrapped(*n.a, precedence(*n.a) < 4, names, out);
      out += '^';
      if (n.exponent.is_integer() && n.exponent.num >= 0) {
        out += n.exponent.to_string();
      } else {
        out += "(" + n.exponent.to_string() + ")";
      }
      return;
    case Op::Add:
    case Op::Sub:
      print_wrapped(*n.a, precedence(*n.a) < 1, names, out);
      out += n.op == Op::Add ? " + " : " - ";
      print_wrapped(*n.b, precedence(*n.b) <= 1, names, out);
      return;
    case Op::Mul:
    case Op::Div:
      print_wrapped(*n.a, precedence(*n.a) < 2, names, out);
      out += n.op == Op::Mul ? "*" : "/";
      print_wrapped(*n.b, precedence(*n.b) <= 2, names, out);
      return;
  }
}

}  // namespace

std::string Expr::to_string(std::span<const std::string> names) const {
  std::string out;
  print(*node_, names, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> names) : src_(src), names_(names) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + term();
      } else if (accept('-')) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * factor();
      } else if (accept('/')) {
        lhs = lhs / factor();
      } else {
        return lhs;
      }
    }
  }

  // Unary minus binds looser than '^': -q^2 = -(q^2).
  Expr factor() {
    if (accept('-')) return -factor();
    Expr b = base();
    if (accept('^')) return pow(b, rational());
    return b;
  }

  Expr base() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return Expr::constant(number_literal().first);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string id = identifier();
      if (peek() == '(') {
        static const std::pair<const char*, Expr (*)(const Expr&)> functions[] = {
            {"sin", [](const Expr& a) { return sin(a); }},
            {"cos", [](const Expr& a) { return cos(a); }},
            {"exp", [](const Expr& a) { return exp(a); }},
            {"log", [](const Expr& a) { return log(a); }},
            {"sqrt", [](const Expr& a) { return sqrt(a); }},
        };
        for (const auto& [name, make] : functions) {
          if (id == name) {
            ++pos_;
            Expr arg = expr();
            expect(')');
            return make(arg);
          }
        }
        throw UnknownIdentifierError("unknown function '" + id + "'", start);
      }
      for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k] == id) return Expr::variable(static_cast<int>(k));
      }
      throw UnknownIdentifierError("unknown identifier '" + id + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  // Returns the value and its exact rational form (when representable).
  std::pair<double, std::optional<Rational>> number_literal() {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t mantissa = 0;
    int decimals = 0;
    bool exact = true;
    bool any_digit = false;
    bool after_point = false;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        any_digit = true;
        if (mantissa > (INT64_MAX - 9) / 10) {
          exact = false;
        } else {
          mantissa = mantissa * 10 + (c - '0');
          if (after_point) ++decimals;
        }
        ++pos_;
      } else if (c == '.' && !after_point) {
        after_point = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (!any_digit) fail("malformed number");
    int exponent = 0;
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      int sign = 1;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        sign = src_[pos_] == '-' ? -1 : 1;
        ++pos_;
      }
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        pos_ = save;
      } else {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          exponent = exponent * 10 + (src_[pos_] - '0');
          if (exponent > 400) exact = false;
          ++pos_;
        }
        exponent *= sign;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    const double value = std::strtod(text.c_str(), nullptr);
    std::optional<Rational> rational;
    const int power = exponent - decimals;
    if (exact && power >= -18 && power <= 18) {
      std::int64_t scale = 1;
      for (int k = 0; k < (power < 0 ? -power : power); ++k) scale *= 10;
      if (power >= 0) {
        if (mantissa <= INT64_MAX / scale) rational = Rational::make(mantissa * scale, 1);
      } else {
        rational = Rational::make(mantissa, scale);
      }
    }
    return {value, rational};
  }

  Rational signed_rational(bool allow_fraction) {
    bool negative = false;
    if (accept('-')) negative = true;
    const char c = peek();
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.')) {
      throw NonConstantExponentError("exponent must be a rational constant", pos_);
    }
    auto [value, num] = number_literal();
    if (!num) fail("exponent is not an exact rational");
    Rational r = *num;
    if (allow_fraction && accept('/')) {
      const char d = peek();
      if (!(std::isdigit(static_cast<unsigned char>(d)) || d == '.')) {
        throw NonConstantExponentError("exponent must be a rational constant", pos_);
      }
      auto [dv, den] = number_literal();
      if (!den || den->num == 0) fail("bad exponent denominator");
      r = Rational::make(r.num * den->den, r.den * den->num);
    }
    if (negative) r.num = -r.num;
    return r;
  }

  Rational rational() {
    if (accept('(')) {
      Rational r = signed_rational(true);
      if (!accept(')')) throw NonConstantExponentError("exponent must be a rational constant", pos_);
      return r;
    }
    // Without parentheses a '/' after the exponent divides the power: q^2/2 = (q^2)/2.
    return signed_rational(false);
  }

  std::string_view src_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view source, std::span<const std::string> names) {
  return Parser(source, names).parse();
}

}  // namespace jetlift
