#include "fracineq/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace fracineq::expr {
namespace detail {

enum class Op {
  kConst,
  kVar,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,  // both the ^ operator and pow(u, v)
  kExp,
  kLog,
  kSqrt,
  kAbs,
};

struct Node {
  Op op;
  double value = 0;  // kConst only
  std::shared_ptr<const Node> a, b;
};

using NodePtr = std::shared_ptr<const Node>;

namespace {

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_const(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::kConst;
  n->value = v;
  return n;
}

[[noreturn]] void domain_fail(const char* what) { throw EvalError(what); }

double checked(double v, const char* what) {
  if (!std::isfinite(v)) domain_fail(what);
  return v;
}

double eval_node(const Node& n, double x) {
  switch (n.op) {
    case Op::kConst:
      return n.value;
    case Op::kVar:
      return x;
    case Op::kNeg:
      return -eval_node(*n.a, x);
    case Op::kAdd:
      return checked(eval_node(*n.a, x) + eval_node(*n.b, x), "overflow in +");
    case Op::kSub:
      return checked(eval_node(*n.a, x) - eval_node(*n.b, x), "overflow in -");
    case Op::kMul:
      return checked(eval_node(*n.a, x) * eval_node(*n.b, x), "overflow in *");
    case Op::kDiv: {
      double num = eval_node(*n.a, x), den = eval_node(*n.b, x);
      if (den == 0.0) domain_fail("division by zero");
      return checked(num / den, "overflow in /");
    }
    case Op::kPow: {
      double base = eval_node(*n.a, x), e = eval_node(*n.b, x);
      return checked(std::pow(base, e), "pow outside real domain");
    }
    case Op::kExp:
      return checked(std::exp(eval_node(*n.a, x)), "overflow in exp");
    case Op::kLog: {
      double v = eval_node(*n.a, x);
      if (v <= 0.0) domain_fail("log of non-positive value");
      return std::log(v);
    }
    case Op::kSqrt: {
      double v = eval_node(*n.a, x);
      if (v < 0.0) domain_fail("sqrt of negative value");
      return std::sqrt(v);
    }
    case Op::kAbs:
      return std::fabs(eval_node(*n.a, x));
  }
  domain_fail("corrupt expression node");
}

bool node_equal(const Node* l, const Node* r) {
  if (l == r) return true;
  if (l == nullptr || r == nullptr) return false;
  if (l->op != r->op) return false;
  if (l->op == Op::kConst) {
    // Bit comparison: string round-trips must preserve constants exactly.
    return l->value == r->value && std::signbit(l->value) == std::signbit(r->value);
  }
  return node_equal(l->a.get(), r->a.get()) && node_equal(l->b.get(), r->b.get());
}

// Binding strength used by the printer; mirrors the grammar.
enum Prec { kPrecAdd = 0, kPrecMul = 1, kPrecUnary = 2, kPrecPow = 3, kPrecAtom = 4 };

int precedence(const Node& n) {
  switch (n.op) {
    case Op::kAdd:
    case Op::kSub:
      return kPrecAdd;
    case Op::kMul:
    case Op::kDiv:
      return kPrecMul;
    case Op::kNeg:
      return kPrecUnary;
    case Op::kPow:
      return n.b ? kPrecPow : kPrecAtom;  // pow(u, v) prints as a call
    default:
      return kPrecAtom;
  }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out) {
  bool parens = precedence(child) < min_prec;
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_const(double v, std::string& out) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void print_node(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::kConst:
      print_const(n.value, out);
      return;
    case Op::kVar:
      out += 'x';
      return;
    case Op::kNeg:
      out += '-';
      print_child(*n.a, kPrecUnary, out);
      return;
    case Op::kAdd:
    case Op::kSub:
      print_child(*n.a, kPrecAdd, out);
      out += (n.op == Op::kAdd) ? " + " : " - ";
      // Right side needs strictly higher binding so "a - (b + c)" keeps parens.
      print_child(*n.b, kPrecAdd + 1, out);
      return;
    case Op::kMul:
    case Op::kDiv:
      print_child(*n.a, kPrecMul, out);
      out += (n.op == Op::kMul) ? "*" : "/";
      print_child(*n.b, kPrecMul + 1, out);
      return;
    case Op::kPow:
      // "^" is right-associative: parenthesise a left child that is itself a
      // power, but not a right child.
      print_child(*n.a, kPrecPow + 1, out);
      out += '^';
      print_child(*n.b, kPrecUnary, out);
      return;
    case Op::kExp:
    case Op::kLog:
    case Op::kSqrt:
    case Op::kAbs: {
      const char* name = n.op == Op::kExp    ? "exp"
                         : n.op == Op::kLog  ? "log"
                         : n.op == Op::kSqrt ? "sqrt"
                                             : "abs";
      out += name;
      out += '(';
      print_node(*n.a, out);
      out += ')';
      return;
    }
  }
}

// --- recursive-descent parser -----------------------------------------------

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(msg, pos);
  }

  NodePtr parse_expression() { return parse_additive(); }

  NodePtr parse_additive() {
    NodePtr lhs = parse_multiplicative();
    for (;;) {
      if (eat('+'))
        lhs = make(Op::kAdd, lhs, parse_multiplicative());
      else if (eat('-'))
        lhs = make(Op::kSub, lhs, parse_multiplicative());
      else
        return lhs;
    }
  }

  NodePtr parse_multiplicative() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (eat('*'))
        lhs = make(Op::kMul, lhs, parse_unary());
      else if (eat('/'))
        lhs = make(Op::kDiv, lhs, parse_unary());
      else
        return lhs;
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return make(Op::kNeg, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (eat('^')) return make(Op::kPow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expression();
      expect(')', "')'");
      return inner;
    }
    fail("expected a number, 'x', a function call, or '('");
  }

  NodePtr parse_number() {
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos < src.size() && src[pos] == '.') {
      ++pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    if (pos == start || (pos == start + 1 && src[start] == '.'))
      throw ParseError("malformed number", start);
    if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
      std::size_t mark = pos;
      ++pos;
      if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
      if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      } else {
        pos = mark;  // "2e" is the number 2 followed by a (bad) identifier
      }
    }
    std::string text(src.substr(start, pos - start));
    return make_const(std::strtod(text.c_str(), nullptr));
  }

  NodePtr parse_ident() {
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string_view name = src.substr(start, pos - start);
    if (name == "x") return make(Op::kVar);
    Op op;
    if (name == "exp")
      op = Op::kExp;
    else if (name == "log")
      op = Op::kLog;
    else if (name == "sqrt")
      op = Op::kSqrt;
    else if (name == "abs")
      op = Op::kAbs;
    else if (name == "pow") {
      expect('(', "'(' after pow");
      NodePtr u = parse_expression();
      expect(',', "',' between pow arguments");
      NodePtr v = parse_expression();
      expect(')', "')'");
      return make(Op::kPow, u, v);
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    expect('(', "'(' after function name");
    NodePtr arg = parse_expression();
    expect(')', "')'");
    return make(op, arg);
  }
};

}  // namespace
}  // namespace detail

double Expr::eval(double x) const {
  if (!root_) throw EvalError("evaluating an empty expression");
  return detail::eval_node(*root_, x);
}

std::string Expr::str() const {
  if (!root_) return "";
  std::string out;
  detail::print_node(*root_, out);
  return out;
}

bool operator==(const Expr& l, const Expr& r) {
  return detail::node_equal(l.root_.get(), r.root_.get());
}

Expr parse(std::string_view src) {
  detail::Parser p{src};
  detail::NodePtr root = p.parse_expression();
  p.skip_ws();
  if (p.pos != src.size()) throw ParseError("trailing input after expression", p.pos);
  return Expr(std::move(root));
}

DerivReport check_derivative_consistency(const Expr& f, const Expr& fprime,
                                         double lo, double hi, int n, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("check_derivative_consistency: lo < hi required");
  if (n < 2) throw std::invalid_argument("check_derivative_consistency: n >= 2 required");
  const double h_rel = std::cbrt(2.2e-16);  // optimal scale for a central difference
  DerivReport rep;
  rep.ok = true;
  for (int i = 0; i < n; ++i) {
    // Interior points only; x ± h must stay inside [lo, hi].
    double x = lo + (hi - lo) * (i + 0.5) / n;
    double h = h_rel * std::max(1.0, std::fabs(x));
    h = std::min(h, 0.25 * std::min(x - lo, hi - x));
    if (h <= 0) continue;
    double fd = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
    double dev = std::fabs(fd - fprime.eval(x));
    if (dev > rep.max_abs_dev) {
      rep.max_abs_dev = dev;
      rep.worst_x = x;
    }
  }
  rep.ok = rep.max_abs_dev <= tol;
  return rep;
}

}  // namespace fracineq::expr
